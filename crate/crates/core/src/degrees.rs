use std::fmt;

use crate::error::{Error, Result};

/// Degrees `d_1, …, d_n` of a system of binary forms (or Jordan block sizes
/// minus one for a Weitzenböck derivation).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeList(Vec<u32>);

impl DegreeList {
    pub fn new(degrees: Vec<u32>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::InvalidDegrees(
                "at least one degree is required".into(),
            ));
        }
        if degrees.contains(&0) {
            return Err(Error::InvalidDegrees("degrees must be positive".into()));
        }
        Ok(DegreeList(degrees))
    }

    /// Accepts signed input and rejects anything below 1.
    pub fn from_signed(degrees: &[i64]) -> Result<Self> {
        let converted = degrees
            .iter()
            .map(|&d| {
                u32::try_from(d)
                    .ok()
                    .filter(|&d| d >= 1)
                    .ok_or_else(|| Error::InvalidDegrees(format!("{d} is not a positive degree")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Self::new(converted)
    }

    pub fn degrees(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `d* = max d_k`.
    pub fn max_degree(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl fmt::Display for DegreeList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}
