//! Ends of the free-group tree as eventually periodic reduced words.
//!
//! A boundary point is written `prefix(period)` and stands for the infinite
//! reduced word `prefix · period · period · …`. Points are kept in canonical
//! form — primitive period, shortest prefix — so equality of points is
//! structural equality.

use super::words::{invert_letter, lcp_len, reduce};
use super::GroupError;
use std::fmt;

/// An end of the tree: `prefix · period^∞`, canonicalized.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundaryPoint {
    prefix: String,
    period: String,
}

impl BoundaryPoint {
    /// Canonicalizes arbitrary (even unreduced) input words.
    ///
    /// Steps: reduce both words; cyclically reduce the period, folding the
    /// conjugating piece into the prefix (`(aba⁻¹)^∞ = a·b^∞`); replace the
    /// period by its primitive root; cancel the prefix–period junction; and
    /// absorb any trailing prefix letters that merely repeat the period.
    pub fn new(prefix: &str, period: &str) -> Result<BoundaryPoint, GroupError> {
        let mut prefix = reduce(prefix)?;
        let mut period: Vec<u8> = reduce(period)?.into_bytes();
        if period.is_empty() {
            return Err(GroupError::EmptyPeriod);
        }

        // Cyclic reduction: q = x·q'·x⁻¹ gives q^∞ = x·q'^∞ by telescoping.
        while period.len() >= 2 && period[period.len() - 1] == invert_letter(period[0]) {
            let x = period.remove(0);
            period.pop();
            prefix.push(x as char);
            prefix = reduce(&prefix)?;
            if period.is_empty() {
                return Err(GroupError::EmptyPeriod);
            }
        }

        // Primitive root.
        let root = primitive_root(&period);
        period.truncate(root);

        // Junction cancellation eats prefix letters against the period
        // stream; the stream itself is reduced because the period is
        // cyclically reduced.
        while !prefix.is_empty()
            && prefix.as_bytes()[prefix.len() - 1] == invert_letter(period[0])
        {
            prefix.pop();
            period.rotate_left(1);
        }

        // Shortest prefix: a trailing letter equal to the period's last
        // letter can be pushed into the periodic part.
        while !prefix.is_empty()
            && prefix.as_bytes()[prefix.len() - 1] == period[period.len() - 1]
        {
            prefix.pop();
            period.rotate_right(1);
        }

        Ok(BoundaryPoint {
            prefix,
            period: String::from_utf8(period).expect("ascii"),
        })
    }

    /// Parses the `prefix(period)` syntax. Whitespace is forbidden.
    pub fn parse(text: &str) -> Result<BoundaryPoint, GroupError> {
        let open = text
            .find('(')
            .ok_or_else(|| GroupError::BadBoundarySyntax(text.to_string()))?;
        if !text.ends_with(')') || open + 1 >= text.len() {
            return Err(GroupError::BadBoundarySyntax(text.to_string()));
        }
        let prefix = &text[..open];
        let period = &text[open + 1..text.len() - 1];
        if period.contains('(') || period.contains(')') || period.is_empty() {
            return Err(GroupError::BadBoundarySyntax(text.to_string()));
        }
        BoundaryPoint::new(prefix, period)
    }

    pub fn prefix(&self) -> &str {
        &self.prefix
    }

    pub fn period(&self) -> &str {
        &self.period
    }

    /// Largest generator index used, for rank validation.
    pub fn max_generator_index(&self) -> u8 {
        self.prefix
            .bytes()
            .chain(self.period.bytes())
            .map(super::words::generator_index)
            .max()
            .unwrap_or(0)
    }

    /// First `len` letters of the infinite word.
    pub fn truncate(&self, len: u32) -> String {
        let len = len as usize;
        let mut out = String::with_capacity(len);
        out.push_str(&self.prefix[..self.prefix.len().min(len)]);
        let period = self.period.as_bytes();
        let mut i = 0;
        while out.len() < len {
            out.push(period[i % period.len()] as char);
            i += 1;
        }
        out
    }

    /// Left translation by a group element: acts on the prefix.
    pub fn translate(&self, g: &str) -> Result<BoundaryPoint, GroupError> {
        let moved = reduce(&format!("{g}{}", self.prefix))?;
        BoundaryPoint::new(&moved, &self.period)
    }

    /// Length of the longest common prefix of two ends' infinite words;
    /// `None` when the points are equal.
    pub fn lcp(&self, other: &BoundaryPoint) -> Option<u32> {
        if self == other {
            return None;
        }
        // Two eventually periodic reduced words that agree this deep must be
        // equal, so divergence happens strictly before it.
        let bound = (self.prefix.len().max(other.prefix.len())
            + self.period.len()
            + other.period.len()
            + 2) as u32;
        let a = self.truncate(bound);
        let b = other.truncate(bound);
        let l = lcp_len(&a, &b) as u32;
        debug_assert!(l < bound, "distinct points must diverge before the bound");
        Some(l)
    }
}

fn primitive_root(word: &[u8]) -> usize {
    let n = word.len();
    for d in 1..=n / 2 {
        if n % d == 0 && word.chunks(d).all(|c| c == &word[..d]) {
            return d;
        }
    }
    n
}

impl fmt::Display for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.prefix, self.period)
    }
}

impl fmt::Debug for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
