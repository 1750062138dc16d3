use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, RwLock};

/// Thread-safe memo table for pure functions. Values are computed outside the
/// lock so recursive lookups do not deadlock; when two threads race on the same
/// key the first insert wins, which is harmless because both computed the same
/// value.
pub(crate) struct Memo<K, V> {
    table: RwLock<HashMap<K, Arc<V>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub(crate) fn new() -> Self {
        Memo {
            table: RwLock::new(HashMap::new()),
        }
    }

    pub(crate) fn get_or_compute(&self, key: &K, compute: impl FnOnce() -> V) -> Arc<V> {
        if let Some(v) = self.table.read().expect("memo lock poisoned").get(key) {
            return Arc::clone(v);
        }
        let value = Arc::new(compute());
        let mut table = self.table.write().expect("memo lock poisoned");
        Arc::clone(table.entry(key.clone()).or_insert(value))
    }
}
