//! Process-wide memo tables. Each key is computed once; concurrent callers
//! asking for the same key wait for the first computation.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::Result;

type Cell<V> = Arc<OnceLock<Result<Arc<V>>>>;

pub struct Memo<K, V> {
    map: Mutex<HashMap<K, Cell<V>>>,
}

impl<K: Eq + Hash, V> Default for Memo<K, V> {
    fn default() -> Self {
        Memo { map: Mutex::new(HashMap::new()) }
    }
}

impl<K: Eq + Hash, V> Memo<K, V> {
    pub fn get_or_compute(&self, key: K, f: impl FnOnce() -> Result<V>) -> Result<Arc<V>> {
        let cell = {
            let mut map = self.map.lock().expect("memo lock poisoned");
            map.entry(key).or_default().clone()
        };
        cell.get_or_init(|| f().map(Arc::new)).clone()
    }
}
