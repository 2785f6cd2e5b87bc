use std::collections::{HashMap, HashSet, VecDeque};

use super::PhyloError;

pub type NodeId = usize;

#[derive(Debug, Clone, PartialEq)]
pub struct Node {
    pub parent: Option<NodeId>,
    pub children: Vec<NodeId>,
    pub label: Option<String>,
    /// Length of the edge to the parent.
    pub branch_length: Option<f64>,
}

impl Node {
    fn new(label: Option<String>, branch_length: Option<f64>) -> Self {
        Self {
            parent: None,
            children: Vec::new(),
            label,
            branch_length,
        }
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }
}

/// A rooted tree stored as an arena of nodes.
///
/// Leaves carry unique labels. Branch lengths are optional; a missing length
/// counts as zero in path computations.
#[derive(Debug, Clone, PartialEq)]
pub struct PhyloTree {
    nodes: Vec<Node>,
    root: NodeId,
}

impl PhyloTree {
    /// A tree holding only an unlabeled root.
    pub fn new() -> Self {
        Self {
            nodes: vec![Node::new(None, None)],
            root: 0,
        }
    }

    pub fn add_child(
        &mut self,
        parent: NodeId,
        label: Option<String>,
        branch_length: Option<f64>,
    ) -> NodeId {
        let id = self.nodes.len();
        let mut node = Node::new(label, branch_length);
        node.parent = Some(parent);
        self.nodes.push(node);
        self.nodes[parent].children.push(id);
        id
    }

    /// Builds a tree from an arena whose parent/child links are already set.
    pub(crate) fn from_parts(nodes: Vec<Node>, root: NodeId) -> Self {
        Self { nodes, root }
    }

    pub(crate) fn node_mut(&mut self, id: NodeId) -> &mut Node {
        &mut self.nodes[id]
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Leaf ids in depth-first, left-to-right order.
    pub fn leaves(&self) -> Vec<NodeId> {
        self.preorder()
            .into_iter()
            .filter(|&id| self.nodes[id].is_leaf())
            .collect()
    }

    pub fn leaf_labels(&self) -> Vec<&str> {
        self.leaves()
            .into_iter()
            .map(|id| self.nodes[id].label.as_deref().unwrap_or(""))
            .collect()
    }

    pub fn leaf_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.is_leaf()).count()
    }

    pub fn find_leaf(&self, label: &str) -> Option<NodeId> {
        self.nodes
            .iter()
            .position(|n| n.is_leaf() && n.label.as_deref() == Some(label))
    }

    /// Nodes reachable from the root, parents before children.
    pub fn preorder(&self) -> Vec<NodeId> {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![self.root];
        while let Some(id) = stack.pop() {
            order.push(id);
            stack.extend(self.nodes[id].children.iter().rev());
        }
        order
    }

    /// Checks leaf labels are present and unique and branch lengths are finite and non-negative.
    pub fn validate(&self) -> Result<(), PhyloError> {
        let mut seen = HashSet::new();
        for id in self.preorder() {
            let node = &self.nodes[id];
            if let Some(len) = node.branch_length {
                if !len.is_finite() || len < 0.0 {
                    return Err(PhyloError::InvalidBranchLength(len));
                }
            }
            if node.is_leaf() {
                let label = node.label.as_deref().unwrap_or("");
                if label.is_empty() {
                    return Err(PhyloError::UnlabeledLeaf);
                }
                if !seen.insert(label) {
                    return Err(PhyloError::DuplicateLeaf(label.to_owned()));
                }
            }
        }
        Ok(())
    }

    /// Sum of branch lengths from the root down to `id`.
    pub fn depth(&self, mut id: NodeId) -> f64 {
        let mut total = 0.0;
        while let Some(parent) = self.nodes[id].parent {
            total += self.nodes[id].branch_length.unwrap_or(0.0);
            id = parent;
        }
        total
    }

    /// Longest path from `id` down to one of its leaves.
    pub fn height(&self, id: NodeId) -> f64 {
        let base = self.depth(id);
        let mut best = 0.0f64;
        let mut stack = vec![(id, base)];
        while let Some((n, d)) = stack.pop() {
            let node = &self.nodes[n];
            if node.is_leaf() {
                best = best.max(d - base);
            }
            for &c in &node.children {
                stack.push((c, d + self.nodes[c].branch_length.unwrap_or(0.0)));
            }
        }
        best
    }

    pub fn root_height(&self) -> f64 {
        self.height(self.root)
    }

    /// Root-to-leaf path lengths keyed by leaf label.
    pub fn leaf_depths(&self) -> HashMap<String, f64> {
        let mut out = HashMap::new();
        let mut stack = vec![(self.root, 0.0)];
        while let Some((n, d)) = stack.pop() {
            let node = &self.nodes[n];
            if node.is_leaf() {
                out.insert(node.label.clone().unwrap_or_default(), d);
            }
            for &c in &node.children {
                stack.push((c, d + self.nodes[c].branch_length.unwrap_or(0.0)));
            }
        }
        out
    }

    /// True when every root-to-leaf path length is within `tolerance` of the others.
    pub fn is_ultrametric(&self, tolerance: f64) -> bool {
        let depths = self.leaf_depths();
        let (lo, hi) = depths
            .values()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &d| (lo.min(d), hi.max(d)));
        hi - lo <= tolerance
    }

    fn ancestors(&self, mut id: NodeId) -> Vec<NodeId> {
        let mut path = vec![id];
        while let Some(p) = self.nodes[id].parent {
            path.push(p);
            id = p;
        }
        path
    }

    /// Sum of branch lengths on the path between two nodes.
    pub fn path_length(&self, a: NodeId, b: NodeId) -> f64 {
        let up_a = self.ancestors(a);
        let up_b: HashSet<_> = self.ancestors(b).into_iter().collect();
        let lca = *up_a.iter().find(|n| up_b.contains(n)).expect("nodes share the root");
        self.depth(a) + self.depth(b) - 2.0 * self.depth(lca)
    }

    /// The same unrooted tree re-hung from `new_root`.
    ///
    /// Each edge keeps its length; the former root stays as an ordinary node.
    /// Rooting at a leaf turns that leaf into an internal node, so leaf-set
    /// comparisons should reroot at internal nodes.
    pub fn reroot(&self, new_root: NodeId) -> PhyloTree {
        let mut adjacency: Vec<Vec<(NodeId, Option<f64>)>> = vec![Vec::new(); self.nodes.len()];
        for (id, node) in self.nodes.iter().enumerate() {
            if let Some(p) = node.parent {
                adjacency[id].push((p, node.branch_length));
                adjacency[p].push((id, node.branch_length));
            }
        }

        let mut nodes: Vec<Node> = self
            .nodes
            .iter()
            .map(|n| Node::new(n.label.clone(), None))
            .collect();
        let mut visited = vec![false; self.nodes.len()];
        visited[new_root] = true;
        let mut queue = VecDeque::from([new_root]);
        while let Some(id) = queue.pop_front() {
            for &(next, length) in &adjacency[id] {
                if visited[next] {
                    continue;
                }
                visited[next] = true;
                nodes[next].parent = Some(id);
                nodes[next].branch_length = length;
                nodes[id].children.push(next);
                queue.push_back(next);
            }
        }
        PhyloTree::from_parts(nodes, new_root)
    }
}

impl Default for PhyloTree {
    fn default() -> Self {
        Self::new()
    }
}
