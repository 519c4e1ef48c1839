use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_traits::Zero;

use crate::cache::{colored_context, plain_context, DiskCache};
use crate::error::Result;
use crate::graph::{colored_table, loop_free_profiles, profile_table};
use crate::partition::GenPartition;
use crate::rational::Q;
use crate::specht::class_enumeration;
use crate::twopart::TwoPartition;

type Table = Arc<BTreeMap<TwoPartition, Q>>;

/// Memoized graph counts `O(Θ)` and `O_{P^r,d}(Θ)`, optionally backed by a
/// [`DiskCache`]. Tables hold every class of the relevant groups, with
/// zeros for classes no graph realizes.
#[derive(Default)]
pub struct Coefficients {
    cache: Option<DiskCache>,
    plain: Mutex<HashMap<GenPartition, Table>>,
    colored: Mutex<HashMap<(u32, u32), Table>>,
}

impl Coefficients {
    pub fn new() -> Self {
        Coefficients::default()
    }

    pub fn with_cache(cache: Option<DiskCache>) -> Self {
        Coefficients {
            cache,
            ..Coefficients::default()
        }
    }

    pub fn cache(&self) -> Option<&DiskCache> {
        self.cache.as_ref()
    }

    fn load_all(
        &self,
        context: &str,
        classes: &[TwoPartition],
    ) -> Option<BTreeMap<TwoPartition, Q>> {
        let cache = self.cache.as_ref()?;
        classes
            .iter()
            .map(|t| cache.load(context, t).map(|v| (t.clone(), v)))
            .collect()
    }

    fn store_all(&self, context: &str, table: &BTreeMap<TwoPartition, Q>) -> Result<()> {
        if let Some(cache) = &self.cache {
            for (t, v) in table {
                cache.store(context, t, v)?;
            }
        }
        Ok(())
    }

    /// `Θ ↦ O(Θ)` for every class of `S_ν`.
    pub fn plain_table(&self, profile: &GenPartition) -> Result<Table> {
        if let Some(t) = self.plain.lock().expect("memo lock").get(profile) {
            return Ok(t.clone());
        }
        let context = plain_context();
        let table = match self.load_all(&context, &class_enumeration(profile)) {
            Some(t) => t,
            None => {
                let t = profile_table(profile);
                self.store_all(&context, &t)?;
                t
            }
        };
        let table = Arc::new(table);
        self.plain
            .lock()
            .expect("memo lock")
            .insert(profile.clone(), table.clone());
        Ok(table)
    }

    pub fn o_theta(&self, theta: &TwoPartition) -> Result<Q> {
        if theta.norm() % 2 == 1 {
            return Ok(Q::zero());
        }
        Ok(self
            .plain_table(&theta.profile())?
            .get(theta)
            .cloned()
            .unwrap_or_else(Q::zero))
    }

    /// `Θ ↦ O_{P^r,d}(Θ)` for every class of every loop-free connected
    /// profile with at most `d` edges.
    pub fn colored_table(&self, r: u32, d: u32) -> Result<Table> {
        if let Some(t) = self.colored.lock().expect("memo lock").get(&(r, d)) {
            return Ok(t.clone());
        }
        let classes: Vec<TwoPartition> = (1..=d)
            .flat_map(loop_free_profiles)
            .flat_map(|p| class_enumeration(&p))
            .collect();
        let context = colored_context(r, d);
        let table = match self.load_all(&context, &classes) {
            Some(t) => t,
            None => {
                let found = colored_table(r, d);
                let mut t: BTreeMap<TwoPartition, Q> =
                    classes.into_iter().map(|c| (c, Q::zero())).collect();
                for (theta, v) in found {
                    t.insert(theta, v);
                }
                self.store_all(&context, &t)?;
                t
            }
        };
        let table = Arc::new(table);
        self.colored
            .lock()
            .expect("memo lock")
            .insert((r, d), table.clone());
        Ok(table)
    }

    pub fn o_theta_colored(&self, theta: &TwoPartition, r: u32, d: u32) -> Result<Q> {
        Ok(self
            .colored_table(r, d)?
            .get(theta)
            .cloned()
            .unwrap_or_else(Q::zero))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q_frac;

    #[test]
    fn cached_and_uncached_agree() {
        let dir = tempfile::tempdir().unwrap();
        let nu = GenPartition::parse("3^2").unwrap();
        let plain = Coefficients::new().plain_table(&nu).unwrap();
        let first = Coefficients::with_cache(Some(DiskCache::open(dir.path()).unwrap()));
        assert_eq!(first.plain_table(&nu).unwrap(), plain);
        let second = Coefficients::with_cache(Some(DiskCache::open(dir.path()).unwrap()));
        assert_eq!(second.plain_table(&nu).unwrap(), plain);

        let colored = Coefficients::new().colored_table(2, 2).unwrap();
        assert_eq!(first.colored_table(2, 2).unwrap(), colored);
        assert_eq!(second.colored_table(2, 2).unwrap(), colored);
    }

    #[test]
    fn single_lookups() {
        let c = Coefficients::new();
        assert_eq!(
            c.o_theta(&TwoPartition::parse("{[2]:[1]}").unwrap())
                .unwrap(),
            q_frac(1, 2)
        );
        assert_eq!(
            c.o_theta(&TwoPartition::parse("{[1]:[1]}").unwrap())
                .unwrap(),
            q_frac(0, 1)
        );
        assert_eq!(
            c.o_theta_colored(&TwoPartition::parse("{[1]:[1,1]}").unwrap(), 3, 1)
                .unwrap(),
            q_frac(6, 1)
        );
    }
}
