//! Newick reading and writing.
//!
//! Supported grammar: nested parenthesized children, optional node labels,
//! optional `:length` suffixes, `[...]` comments, and a terminating `;`.
//! Labels are unquoted runs of characters other than whitespace and `(),:;[]`.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

use super::{NodeId, PhyloError, PhyloTree};

#[derive(Error, Debug, Clone, PartialEq)]
pub enum NewickError {
    #[error("Newick parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("duplicate leaf label '{0}'")]
    DuplicateLeaf(String),
}

fn is_label_byte(b: u8) -> bool {
    !b.is_ascii_whitespace() && !b"(),:;[]".contains(&b)
}

/// True if `label` can be written without quoting.
pub fn is_valid_label(label: &str) -> bool {
    !label.is_empty() && label.bytes().all(is_label_byte)
}

pub fn to_newick(tree: &PhyloTree) -> Result<String, PhyloError> {
    let mut out = String::new();
    write_node(tree, tree.root(), &mut out)?;
    out.push(';');
    Ok(out)
}

fn write_node(tree: &PhyloTree, id: NodeId, out: &mut String) -> Result<(), PhyloError> {
    let node = tree.node(id);
    if !node.children.is_empty() {
        out.push('(');
        for (i, &child) in node.children.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            write_node(tree, child, out)?;
        }
        out.push(')');
    }
    if let Some(label) = &node.label {
        if !is_valid_label(label) {
            return Err(PhyloError::InvalidLabel(label.clone()));
        }
        out.push_str(label);
    } else if node.is_leaf() {
        return Err(PhyloError::UnlabeledLeaf);
    }
    if let Some(length) = node.branch_length {
        write!(out, ":{length}").expect("writing to a String");
    }
    Ok(())
}

pub fn from_newick(text: &str) -> Result<PhyloTree, NewickError> {
    let mut parser = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        tree: PhyloTree::new(),
    };
    let root = parser.tree.root();
    parser.subtree(root)?;
    parser.skip_trivia()?;
    match parser.peek() {
        Some(b';') => parser.pos += 1,
        Some(_) => return Err(parser.error("expected ';'")),
        None => return Err(parser.error("missing terminating ';'")),
    }
    parser.skip_trivia()?;
    if parser.pos < parser.bytes.len() {
        return Err(parser.error("unexpected text after ';'"));
    }

    let tree = parser.tree;
    let mut seen = HashSet::new();
    for id in tree.leaves() {
        let label = tree.node(id).label.clone().unwrap_or_default();
        if !seen.insert(label.clone()) {
            return Err(NewickError::DuplicateLeaf(label));
        }
    }
    Ok(tree)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    tree: PhyloTree,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> NewickError {
        NewickError::Parse {
            offset: self.pos,
            message: message.to_owned(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_trivia(&mut self) -> Result<(), NewickError> {
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_whitespace() => self.pos += 1,
                Some(b'[') => {
                    let start = self.pos;
                    match self.bytes[start..].iter().position(|&b| b == b']') {
                        Some(end) => self.pos = start + end + 1,
                        None => return Err(self.error("unterminated comment")),
                    }
                }
                _ => return Ok(()),
            }
        }
    }

    /// Parses the node rooted at the already-allocated `id`.
    fn subtree(&mut self, id: NodeId) -> Result<(), NewickError> {
        self.skip_trivia()?;
        if self.peek() == Some(b'(') {
            self.pos += 1;
            loop {
                let child = self.tree.add_child(id, None, None);
                self.subtree(child)?;
                self.skip_trivia()?;
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.error("expected ',' or ')'")),
                }
            }
        }
        self.skip_trivia()?;
        let start = self.pos;
        while self.peek().is_some_and(is_label_byte) {
            self.pos += 1;
        }
        if self.pos > start {
            let label = std::str::from_utf8(&self.bytes[start..self.pos])
                .map_err(|_| self.error("label is not valid UTF-8"))?;
            self.tree.node_mut(id).label = Some(label.to_owned());
        } else if self.tree.node(id).is_leaf() {
            return Err(self.error("expected a leaf label"));
        }
        self.skip_trivia()?;
        if self.peek() == Some(b':') {
            self.pos += 1;
            self.skip_trivia()?;
            let start = self.pos;
            while self
                .peek()
                .is_some_and(|b| b.is_ascii_digit() || b"+-.eE".contains(&b))
            {
                self.pos += 1;
            }
            let number = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap_or("");
            let length: f64 = number.parse().map_err(|_| NewickError::Parse {
                offset: start,
                message: format!("invalid branch length '{number}'"),
            })?;
            self.tree.node_mut(id).branch_length = Some(length);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_branch_lengths() {
        let t = from_newick("((A:2,B:2):1,C:3);").unwrap();
        assert_eq!(t.leaf_count(), 3);
        assert_eq!(t.root_height(), 3.0);
        let a = t.find_leaf("A").unwrap();
        assert_eq!(t.depth(a), 3.0);
    }

    #[test]
    fn unbalanced_reports_offset() {
        assert_eq!(
            from_newick("(A,B"),
            Err(NewickError::Parse {
                offset: 4,
                message: "expected ',' or ')'".into()
            })
        );
    }

    #[test]
    fn other_errors() {
        assert!(matches!(from_newick("(A,B)"), Err(NewickError::Parse { offset: 5, .. })));
        assert!(matches!(from_newick("(A,);"), Err(NewickError::Parse { offset: 3, .. })));
        assert!(matches!(from_newick("(A:x,B);"), Err(NewickError::Parse { offset: 3, .. })));
        assert!(matches!(from_newick("(A,B);C"), Err(NewickError::Parse { offset: 6, .. })));
        assert_eq!(from_newick("(A,A);"), Err(NewickError::DuplicateLeaf("A".into())));
    }

    #[test]
    fn comments_whitespace_and_internal_labels() {
        let t = from_newick(" ( A [x] : 1.5 , (B,C)inner:2e-1 ) root ;\n").unwrap();
        assert_eq!(t.node(t.root()).label.as_deref(), Some("root"));
        assert_eq!(to_newick(&t).unwrap(), "(A:1.5,(B,C)inner:0.2)root;");
    }

    #[test]
    fn writer_rejects_bad_labels() {
        let mut t = PhyloTree::new();
        t.add_child(0, Some("a b".into()), None);
        assert!(matches!(to_newick(&t), Err(PhyloError::InvalidLabel(_))));
    }

    #[test]
    fn round_trip_text() {
        let text = "((A:2,B:2):1,C:3);";
        assert_eq!(to_newick(&from_newick(text).unwrap()).unwrap(), text);
    }
}
