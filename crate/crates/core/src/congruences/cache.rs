use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::CongruenceError;
use crate::special::SpecialConstants;

static TABLES: OnceLock<Mutex<HashMap<u64, Arc<SpecialConstants>>>> = OnceLock::new();

/// Bernoulli and Euler tables for `p`, built once per process.
pub(crate) fn constants(p: u64) -> Result<Arc<SpecialConstants>, CongruenceError> {
    let map = TABLES.get_or_init(Default::default);
    if let Some(c) = map.lock().expect("cache lock").get(&p) {
        return Ok(c.clone());
    }
    // built outside the lock; a racing duplicate is harmless
    let built = Arc::new(SpecialConstants::new(p)?);
    Ok(map.lock().expect("cache lock").entry(p).or_insert(built).clone())
}
