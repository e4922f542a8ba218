use std::fmt;

use super::types::ClassType;

/// Multiset of class types: how many of the `k` color classes have each type.
/// Only nonzero counts are stored, sorted by type, so equal multisets compare
/// and hash equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature<T> {
    entries: Vec<(T, u32)>,
}

impl<T: ClassType> Signature<T> {
    pub fn empty() -> Self {
        Signature {
            entries: Vec::new(),
        }
    }

    /// Sums repeated types and drops zero counts.
    pub fn from_counts(counts: impl IntoIterator<Item = (T, u32)>) -> Self {
        let mut entries: Vec<(T, u32)> = counts.into_iter().filter(|&(_, c)| c > 0).collect();
        entries.sort_unstable_by_key(|e| e.0);
        entries.dedup_by(|next, kept| {
            if next.0 == kept.0 {
                kept.1 += next.1;
                true
            } else {
                false
            }
        });
        Signature { entries }
    }

    /// Total number of color classes.
    pub fn k(&self) -> u32 {
        self.entries.iter().map(|&(_, c)| c).sum()
    }

    pub fn get(&self, ty: &T) -> u32 {
        self.entries
            .binary_search_by(|(t, _)| t.cmp(ty))
            .map_or(0, |i| self.entries[i].1)
    }

    pub fn entries(&self) -> &[(T, u32)] {
        &self.entries
    }

    pub fn types(&self) -> impl Iterator<Item = T> + '_ {
        self.entries.iter().map(|&(t, _)| t)
    }

    pub(crate) fn add(&mut self, ty: T, count: u32) {
        match self.entries.binary_search_by(|(t, _)| t.cmp(&ty)) {
            Ok(i) => self.entries[i].1 += count,
            Err(i) => self.entries.insert(i, (ty, count)),
        }
    }

    pub(crate) fn remove(&mut self, ty: T, count: u32) {
        let i = self
            .entries
            .binary_search_by(|(t, _)| t.cmp(&ty))
            .expect("removing a type that is not present");
        self.entries[i].1 -= count;
        if self.entries[i].1 == 0 {
            self.entries.remove(i);
        }
    }
}

impl<T: fmt::Debug> fmt::Debug for Signature<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.entries.iter().map(|(t, c)| (t, c)))
            .finish()
    }
}
