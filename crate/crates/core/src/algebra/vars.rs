use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered list of distinct variable names.
///
/// The order is significant: it fixes the exponent layout of every monomial
/// built over the set and the lexicographic orientation of binomial factors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarSet(Arc<[String]>);

impl VarSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        Ok(VarSet(names.into()))
    }

    /// Single-variable set.
    pub fn single(name: &str) -> Self {
        VarSet(vec![name.to_string()].into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn position(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.0[idx]
    }

    /// True when every name of `other` occurs in `self`.
    pub fn contains_all(&self, other: &VarSet) -> bool {
        other.0.iter().all(|n| self.0.contains(n))
    }

    pub fn without(&self, idx: usize) -> VarSet {
        let names: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != idx)
            .map(|(_, n)| n.clone())
            .collect();
        VarSet(names.into())
    }

    pub fn with(&self, name: &str) -> Result<VarSet> {
        VarSet::new(
            self.0
                .iter()
                .cloned()
                .chain(std::iter::once(name.to_string())),
        )
    }

    /// Position in `target` of each variable of `self`.
    pub fn embedding_into(&self, target: &VarSet) -> Result<Vec<usize>> {
        self.0
            .iter()
            .map(|n| {
                target.index_of(n).ok_or_else(|| Error::VarMismatch {
                    left: self.0.to_vec(),
                    right: target.0.to_vec(),
                })
            })
            .collect()
    }

    pub(crate) fn mismatch(&self, other: &VarSet) -> Error {
        Error::VarMismatch {
            left: self.0.to_vec(),
            right: other.0.to_vec(),
        }
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}
