//! Memo tables for Clebsch-Gordan maps and recoupling tables.
//!
//! Caching is explicit rather than process-global: a [`Cache`] is a plain
//! value owned by the caller, so sharing across threads is the caller's
//! choice (clone one per worker, or compute without one).

use alloc::collections::BTreeMap;

use crate::rep::{CoproductSide, LinMap};
use crate::sixj::SixJTable;

type CgKey = (usize, usize, usize, CoproductSide);

/// Memoized embeddings, projections and recoupling tables.
#[derive(Debug, Default, Clone)]
pub struct Cache {
    pub(crate) embeddings: BTreeMap<CgKey, LinMap>,
    pub(crate) projections: BTreeMap<CgKey, LinMap>,
    pub(crate) sixj_tables: BTreeMap<(usize, usize, usize, usize), SixJTable>,
}

impl Cache {
    pub fn new() -> Self {
        Cache::default()
    }

    pub fn len(&self) -> usize {
        self.embeddings.len() + self.projections.len() + self.sixj_tables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
