use std::fmt;

use dashmap::mapref::entry::Entry;
use dashmap::DashMap;

use crate::group::GroupElement;

type PairKey = (GroupElement, GroupElement);

/// Concurrent write-once cache keyed by ordered element pairs.
///
/// Recursions that use it are pure, so a racing second insert always carries
/// the value already stored; the first write wins and later writes are
/// checked against it in debug builds. A disabled memo stores nothing, which
/// gives the from-scratch evaluation used to test idempotence.
pub struct PairMemo<V> {
    table: Option<DashMap<PairKey, V>>,
}

impl<V: Clone + PartialEq + fmt::Debug> PairMemo<V> {
    pub fn new() -> Self {
        PairMemo {
            table: Some(DashMap::new()),
        }
    }

    pub fn disabled() -> Self {
        PairMemo { table: None }
    }

    pub fn is_enabled(&self) -> bool {
        self.table.is_some()
    }

    pub fn get(&self, v: &GroupElement, w: &GroupElement) -> Option<V> {
        let table = self.table.as_ref()?;
        table.get(&(v.clone(), w.clone())).map(|e| e.value().clone())
    }

    pub fn insert(&self, v: &GroupElement, w: &GroupElement, value: V) -> V {
        let Some(table) = &self.table else {
            return value;
        };
        match table.entry((v.clone(), w.clone())) {
            Entry::Occupied(e) => {
                debug_assert_eq!(e.get(), &value, "memo entry rewritten with a different value");
                e.get().clone()
            }
            Entry::Vacant(e) => {
                e.insert(value.clone());
                value
            }
        }
    }

    pub fn len(&self) -> usize {
        self.table.as_ref().map_or(0, DashMap::len)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Snapshot of every stored entry, in no particular order.
    pub fn entries(&self) -> Vec<(GroupElement, GroupElement, V)> {
        self.table.as_ref().map_or_else(Vec::new, |t| {
            t.iter()
                .map(|e| (e.key().0.clone(), e.key().1.clone(), e.value().clone()))
                .collect()
        })
    }
}

impl<V: Clone + PartialEq + fmt::Debug> Default for PairMemo<V> {
    fn default() -> Self {
        Self::new()
    }
}

impl<V> fmt::Debug for PairMemo<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.table {
            Some(t) => write!(f, "PairMemo({} entries)", t.len()),
            None => f.write_str("PairMemo(disabled)"),
        }
    }
}
