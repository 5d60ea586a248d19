use std::fmt;

use crate::error::{Error, Result};

/// Weights `[w0, ..., wn]` of a linear chain of boundary curves.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Zigzag(pub Vec<i64>);

impl Zigzag {
    pub fn weights(&self) -> &[i64] {
        &self.0
    }

    /// `[[0]]`, `[[0,0]]`, `[[0,0,0]]` or `[[0,0,w2,...,wn]]` with all `wj <= -2`.
    pub fn is_standard(&self) -> bool {
        match self.0.as_slice() {
            [0] | [0, 0] | [0, 0, 0] => true,
            [0, 0, rest @ ..] => rest.iter().all(|&w| w <= -2),
            _ => false,
        }
    }

    /// `[[0,0,w2,...,wn]]` to `[[0,0,wn,...,w2]]`.
    pub fn reversed(&self) -> Result<Zigzag> {
        if !self.is_standard() {
            return Err(Error::NotStandard(self.0.clone()));
        }
        let mut w = self.0.clone();
        if w.len() > 2 {
            w[2..].reverse();
        }
        Ok(Zigzag(w))
    }

    pub fn is_symmetric(&self) -> bool {
        self.reversed().map(|r| &r == self).unwrap_or(false)
    }
}

pub fn reverse_zigzag(z: &Zigzag) -> Result<Zigzag> {
    z.reversed()
}

impl fmt::Display for Zigzag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|w| w.to_string()).collect();
        write!(f, "[[{}]]", parts.join(","))
    }
}
