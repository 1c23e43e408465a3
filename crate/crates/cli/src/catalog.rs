//! Every runnable check, with its cell generator and evaluator.

use std::sync::Arc;

use delannoy_core::check::CellBounds;
use delannoy_core::congruences::{self, CongruenceId};
use delannoy_core::conjectures::{self, ConjectureId, DEFAULT_IRREDUCIBILITY_PRIMES};
use delannoy_core::exact::odd_primes_in;
use delannoy_core::identities::{self, IdentityId};
use delannoy_core::{CheckResult, Params, Suite};
use num_bigint::BigInt;

use crate::config::REMARK_PRIME;

pub type Evaluator = Arc<dyn Fn(&Params) -> delannoy_core::Result<CheckResult> + Send + Sync>;
pub type CellGenerator = Arc<dyn Fn(&CellBounds) -> Vec<Params> + Send + Sync>;

#[derive(Clone)]
pub struct Entry {
    pub suite: Suite,
    pub id: String,
    pub reference: String,
    pub cells: CellGenerator,
    pub eval: Evaluator,
}

pub const BIGPRIME_ID: &str = "REMARK_1_2";

#[derive(Clone)]
pub struct Catalog {
    entries: Vec<Entry>,
}

impl Catalog {
    pub fn standard() -> Self {
        let mut entries = Vec::new();
        for &id in IdentityId::ALL {
            entries.push(Entry {
                suite: Suite::Identities,
                id: id.as_str().into(),
                reference: id.reference().into(),
                cells: Arc::new(move |b| identities::identity_cells(id, b)),
                eval: Arc::new(move |p| identities::verify_identity(id, p)),
            });
        }
        for &id in CongruenceId::ALL {
            entries.push(Entry {
                suite: Suite::Congruences,
                id: id.as_str().into(),
                reference: id.reference().into(),
                cells: Arc::new(move |b| congruences::congruence_cells(id, b)),
                eval: Arc::new(move |p| congruences::verify_congruence_cell(id, p)),
            });
        }
        let irreducibility_primes: Arc<[u64]> =
            odd_primes_in(DEFAULT_IRREDUCIBILITY_PRIMES.0, DEFAULT_IRREDUCIBILITY_PRIMES.1).into();
        for &id in ConjectureId::ALL {
            let primes = irreducibility_primes.clone();
            entries.push(Entry {
                suite: Suite::Conjectures,
                id: id.as_str().into(),
                reference: id.reference().into(),
                cells: Arc::new(move |b| conjectures::conjecture_cells(id, b)),
                eval: Arc::new(move |p| conjectures::verify_conjecture(id, p, &primes)),
            });
        }
        entries.push(Entry {
            suite: Suite::Bigprime,
            id: BIGPRIME_ID.into(),
            reference: "Remark 1.2".into(),
            cells: Arc::new(bigprime_cells),
            eval: Arc::new(|params| {
                let p = params.get("p").copied().unwrap_or(REMARK_PRIME as i64);
                let y = params.get("y").copied().unwrap_or(2);
                congruences::bigprime_remark12(p as u64, &BigInt::from(y))
            }),
        });
        Catalog { entries }
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn find(&self, id: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// Swaps the evaluator of `id`; returns whether the id exists.
    pub fn replace_evaluator(&mut self, id: &str, eval: Evaluator) -> bool {
        match self.entries.iter_mut().find(|e| e.id == id) {
            Some(e) => {
                e.eval = eval;
                true
            }
            None => false,
        }
    }

    /// Entries in the given suites, restricted to `ids` when non-empty.
    pub fn select(&self, suites: &[Suite], ids: &[String]) -> Vec<&Entry> {
        self.entries
            .iter()
            .filter(|e| suites.contains(&e.suite))
            .filter(|e| ids.is_empty() || ids.contains(&e.id))
            .collect()
    }
}

/// Primes from the configured range, else the remark's prime; `y` from
/// the `y` grid, else 2.
fn bigprime_cells(b: &CellBounds) -> Vec<Params> {
    let primes = match b.primes {
        Some(_) => b.odd_primes(3, 3),
        None => vec![REMARK_PRIME],
    };
    let mut out = Vec::new();
    for p in primes {
        for y in b.range("y", 2, 2) {
            out.push(delannoy_core::check::params_of(&[("p", p as i64), ("y", y)]));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_covers_every_core_id() {
        let c = Catalog::standard();
        let count = |s: Suite| c.entries().iter().filter(|e| e.suite == s).count();
        assert_eq!(count(Suite::Identities), IdentityId::ALL.len());
        assert_eq!(count(Suite::Congruences), CongruenceId::ALL.len());
        assert_eq!(count(Suite::Conjectures), ConjectureId::ALL.len());
        assert_eq!(count(Suite::Bigprime), 1);
        assert_eq!(c.find("EQ_1_7").unwrap().reference, "Theorem 1.1(i)");
    }

    #[test]
    fn bigprime_cells_default_to_the_remark_prime() {
        let cells = bigprime_cells(&CellBounds::default());
        assert_eq!(cells.len(), 1);
        assert_eq!(cells[0]["p"], REMARK_PRIME as i64);
        assert_eq!(cells[0]["y"], 2);
    }

    #[test]
    fn replace_evaluator_reports_unknown_ids() {
        let mut c = Catalog::standard();
        let e = c.find("C_WOLST").unwrap().eval.clone();
        assert!(c.replace_evaluator("C_WOLST", e.clone()));
        assert!(!c.replace_evaluator("NOPE", e));
    }
}
