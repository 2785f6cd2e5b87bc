//! Nucleotide codes and sanitized, encoded sequences.

use std::fmt;

use super::PpnError;

/// One of the four DNA bases, stored as its 2-bit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Nucleotide {
    A = 0,
    C = 1,
    G = 2,
    T = 3,
}

impl Nucleotide {
    pub const ALL: [Nucleotide; 4] = [Nucleotide::A, Nucleotide::C, Nucleotide::G, Nucleotide::T];

    /// Case-insensitive decoding of a single ASCII base.
    #[inline]
    pub fn from_ascii(byte: u8) -> Option<Self> {
        match byte {
            b'A' | b'a' => Some(Nucleotide::A),
            b'C' | b'c' => Some(Nucleotide::C),
            b'G' | b'g' => Some(Nucleotide::G),
            b'T' | b't' => Some(Nucleotide::T),
            _ => None,
        }
    }

    #[inline]
    pub fn from_code(code: u8) -> Option<Self> {
        Self::ALL.get(code as usize).copied()
    }

    #[inline]
    pub fn code(self) -> u8 {
        self as u8
    }

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    #[inline]
    pub fn to_ascii(self) -> u8 {
        b"ACGT"[self as usize]
    }
}

impl fmt::Display for Nucleotide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ascii() as char)
    }
}

/// What to do with characters outside `{A, C, G, T}` (any case).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SanitizePolicy {
    /// Skip unknown symbols (ambiguity codes, gaps, `*`) and count them.
    #[default]
    Drop,
    /// Reject the first unknown symbol.
    Strict,
}

/// An identified nucleotide string.
///
/// `dropped` records how many non-whitespace characters were discarded while
/// encoding under [`SanitizePolicy::Drop`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodedSequence {
    id: String,
    codes: Vec<Nucleotide>,
    dropped: usize,
}

impl EncodedSequence {
    /// Builds a sequence from already-decoded bases. Fails on an empty slice.
    pub fn new(id: impl Into<String>, codes: Vec<Nucleotide>) -> Result<Self, PpnError> {
        if codes.is_empty() {
            return Err(PpnError::EmptySequence);
        }
        Ok(Self {
            id: id.into(),
            codes,
            dropped: 0,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn codes(&self) -> &[Nucleotide] {
        &self.codes
    }

    /// Sequence length `N`.
    pub fn len(&self) -> usize {
        self.codes.len()
    }

    /// Always `false` for a constructed sequence; kept for API symmetry.
    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn dropped(&self) -> usize {
        self.dropped
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = id.into();
        self
    }

    /// Applies a base relabeling: every base `b` becomes `mapping[b]`.
    pub fn relabeled(&self, mapping: [Nucleotide; 4]) -> Self {
        Self {
            id: self.id.clone(),
            codes: self.codes.iter().map(|b| mapping[b.index()]).collect(),
            dropped: self.dropped,
        }
    }

    pub fn to_ascii_string(&self) -> String {
        self.codes.iter().map(|b| b.to_ascii() as char).collect()
    }
}

/// Encodes raw text into an [`EncodedSequence`] with an empty id.
///
/// Whitespace is always ignored and never counted as dropped.
pub fn encode(raw: &str, policy: SanitizePolicy) -> Result<EncodedSequence, PpnError> {
    encode_bytes("", raw.as_bytes(), policy)
}

pub(crate) fn encode_bytes(
    id: &str,
    raw: &[u8],
    policy: SanitizePolicy,
) -> Result<EncodedSequence, PpnError> {
    let mut codes = Vec::with_capacity(raw.len());
    let mut dropped = 0usize;
    for (position, &byte) in raw.iter().enumerate() {
        if byte.is_ascii_whitespace() {
            continue;
        }
        match Nucleotide::from_ascii(byte) {
            Some(base) => codes.push(base),
            None => match policy {
                SanitizePolicy::Drop => dropped += 1,
                SanitizePolicy::Strict => {
                    return Err(PpnError::InvalidCharacter {
                        character: byte as char,
                        position,
                    })
                }
            },
        }
    }
    if codes.is_empty() {
        return Err(PpnError::EmptySequence);
    }
    Ok(EncodedSequence {
        id: id.to_owned(),
        codes,
        dropped,
    })
}
