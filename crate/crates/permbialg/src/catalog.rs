//! Named desk-scale instances used across tests, docs and the CLI.
//!
//! Every entry carries an advertised property (perm, bialgebra, a
//! classification, or quadratic Rota-Baxter cleanliness) and the catalog
//! re-verifies all of them once when first accessed; a violation is a bug
//! in the kernel and panics.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::bialgebra::{
    bialgebra_defects, classify, Classification, PermBialgebra, PermCoalgebra,
};
use crate::double::{build_double, canonical_r};
use crate::error::{Error, Result};
use crate::perm::PermAlgebra;
use crate::rotabaxter::{
    first_nontrivial_rb_operator, quadratic_rb_defects, semidirect_quadratic_rb,
    QuadraticRbData,
};
use crate::scalar::Scalar;
use crate::tensor::TwoTensor;

/// The payload of a catalog entry. Tensors never travel without the
/// algebra they live on.
#[derive(Clone, Debug)]
pub enum CatalogPayload {
    Algebra(PermAlgebra),
    Bialgebra(PermBialgebra),
    AlgebraTensor {
        algebra: PermAlgebra,
        tensor: TwoTensor,
    },
    QuadraticRb(QuadraticRbData),
}

/// The property an entry advertises and re-verifies at load time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expectation {
    PermClean,
    /// The perm axioms fail, with a left-commutativity defect at exactly
    /// this basis triple.
    PermDefectAt(usize, usize, usize),
    BialgebraClean,
    Classified(Classification),
    QuadraticRbClean,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub provenance: String,
    pub payload: CatalogPayload,
    pub expectation: Expectation,
}

impl CatalogEntry {
    /// Re-verify the advertised property.
    pub fn self_check(&self) -> std::result::Result<(), String> {
        match (&self.payload, &self.expectation) {
            (CatalogPayload::Algebra(a), Expectation::PermClean) => {
                if a.perm_axiom_defects().is_empty() {
                    Ok(())
                } else {
                    Err("perm axiom defects are nonempty".into())
                }
            }
            (CatalogPayload::Algebra(a), Expectation::PermDefectAt(i, j, k)) => {
                let defects = a.perm_axiom_defects();
                if defects.is_empty() {
                    return Err("expected perm axiom defects, found none".into());
                }
                if defects
                    .iter()
                    .any(|d| (d.i, d.j, d.k) == (*i, *j, *k) && !d.left_comm.is_zero())
                {
                    Ok(())
                } else {
                    Err(format!(
                        "expected a left-commutativity defect at ({i},{j},{k})"
                    ))
                }
            }
            (CatalogPayload::Bialgebra(b), Expectation::BialgebraClean) => {
                if !b.algebra.perm_axiom_defects().is_empty() {
                    return Err("algebra part fails the perm axioms".into());
                }
                if !b.coproduct.coalgebra_defects().is_empty() {
                    return Err("coproduct part fails the coalgebra axioms".into());
                }
                if bialgebra_defects(b).is_clean() {
                    Ok(())
                } else {
                    Err("bialgebra compatibility defects are nonempty".into())
                }
            }
            (CatalogPayload::AlgebraTensor { algebra, tensor }, Expectation::Classified(c)) => {
                let got = classify(algebra, tensor).map_err(|e| e.to_string())?;
                if got == *c {
                    Ok(())
                } else {
                    Err(format!("expected classification {c}, got {got}"))
                }
            }
            (CatalogPayload::QuadraticRb(d), Expectation::QuadraticRbClean) => {
                if quadratic_rb_defects(d).is_clean() {
                    Ok(())
                } else {
                    Err("quadratic Rota-Baxter defects are nonempty".into())
                }
            }
            _ => Err("payload and expectation kinds do not match".into()),
        }
    }
}

/// `e1·e1 = e1, e1·e2 = e2`: left multiplication by the `e1`-coefficient.
pub fn lperm2() -> PermAlgebra {
    PermAlgebra::from_entries(
        2,
        None,
        &[
            (0, 0, 0, Scalar::one()),
            (0, 1, 1, Scalar::one()),
        ],
    )
    .expect("valid entries")
}

/// `e1·e1 = e2`, every other product zero.
pub fn nilp2() -> PermAlgebra {
    PermAlgebra::from_entries(2, None, &[(0, 0, 1, Scalar::one())]).expect("valid entries")
}

/// Only `e1·e2 = e1`: violates left-commutativity at `(e1, e2, e2)`.
pub fn broken2() -> PermAlgebra {
    PermAlgebra::from_entries(2, None, &[(0, 1, 0, Scalar::one())]).expect("valid entries")
}

fn trivial_bialgebra(alg: PermAlgebra) -> PermBialgebra {
    let n = alg.dim();
    PermBialgebra::new(alg, PermCoalgebra::zero(n)).expect("dims match")
}

fn skew2(dim: usize, i: usize, j: usize) -> TwoTensor {
    TwoTensor::from_entries(
        dim,
        &[(i, j, Scalar::one()), (j, i, Scalar::from(-1))],
    )
    .expect("valid entries")
}

fn catalog() -> &'static BTreeMap<String, CatalogEntry> {
    static CATALOG: OnceLock<BTreeMap<String, CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let map = build();
        for entry in map.values() {
            if let Err(msg) = entry.self_check() {
                panic!(
                    "catalog entry {:?} failed its advertised check: {msg}",
                    entry.name
                );
            }
        }
        map
    })
}

fn build() -> BTreeMap<String, CatalogEntry> {
    let mut map = BTreeMap::new();
    let mut add = |name: &str, provenance: &str, payload: CatalogPayload, expectation| {
        map.insert(
            name.to_string(),
            CatalogEntry {
                name: name.to_string(),
                provenance: provenance.to_string(),
                payload,
                expectation,
            },
        );
    };

    for n in 1..=4usize {
        add(
            &format!("zero{n}"),
            "zero multiplication",
            CatalogPayload::Algebra(PermAlgebra::zero(n)),
            Expectation::PermClean,
        );
    }
    add(
        "nilp2",
        "single nilpotent generator: e1·e1 = e2",
        CatalogPayload::Algebra(nilp2()),
        Expectation::PermClean,
    );
    add(
        "lperm2",
        "scaling by the e1-coefficient: e1·e1 = e1, e1·e2 = e2",
        CatalogPayload::Algebra(lperm2()),
        Expectation::PermClean,
    );
    add(
        "lperm2-oplus-lperm2",
        "direct sum of two copies of lperm2",
        CatalogPayload::Algebra(lperm2().direct_sum(&lperm2())),
        Expectation::PermClean,
    );
    add(
        "broken2",
        "deliberately violates left-commutativity at basis triple (0,1,1)",
        CatalogPayload::Algebra(broken2()),
        Expectation::PermDefectAt(0, 1, 1),
    );

    let base_algebras: Vec<(&str, PermAlgebra)> = vec![
        ("zero1", PermAlgebra::zero(1)),
        ("zero2", PermAlgebra::zero(2)),
        ("zero3", PermAlgebra::zero(3)),
        ("zero4", PermAlgebra::zero(4)),
        ("nilp2", nilp2()),
        ("lperm2", lperm2()),
        ("lperm2-oplus-lperm2", lperm2().direct_sum(&lperm2())),
    ];
    for (name, alg) in &base_algebras {
        add(
            &format!("bialg-{name}"),
            "trivial-coproduct bialgebra",
            CatalogPayload::Bialgebra(trivial_bialgebra(alg.clone())),
            Expectation::BialgebraClean,
        );
    }

    for name in ["zero2", "nilp2", "lperm2", "lperm2-oplus-lperm2"] {
        let alg = base_algebras
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, a)| a.clone())
            .expect("base algebra present");
        let n = alg.dim();
        let double = build_double(&trivial_bialgebra(alg)).expect("clean bialgebra");
        add(
            &format!("double-{name}"),
            "double of the trivial-coproduct bialgebra, with the canonical tensor",
            CatalogPayload::AlgebraTensor {
                algebra: double.total,
                tensor: canonical_r(n),
            },
            Expectation::Classified(Classification::Factorizable),
        );
    }

    add(
        "zero2-skew-r",
        "skew nondegenerate tensor over the zero algebra",
        CatalogPayload::AlgebraTensor {
            algebra: PermAlgebra::zero(2),
            tensor: skew2(2, 0, 1),
        },
        Expectation::Classified(Classification::Factorizable),
    );
    add(
        "zero3-qt-r",
        "degenerate skew tensor over the zero algebra: quasi-triangular but not factorizable",
        CatalogPayload::AlgebraTensor {
            algebra: PermAlgebra::zero(3),
            tensor: skew2(3, 0, 1),
        },
        Expectation::Classified(Classification::QuasiTriangular),
    );
    add(
        "lperm2-sym-r",
        "symmetric Yang-Baxter solution e1⊗e1 on lperm2",
        CatalogPayload::AlgebraTensor {
            algebra: lperm2(),
            tensor: TwoTensor::basis(2, 0, 0),
        },
        Expectation::Classified(Classification::Triangular),
    );
    add(
        "lperm2-zero-r",
        "zero tensor on lperm2",
        CatalogPayload::AlgebraTensor {
            algebra: lperm2(),
            tensor: TwoTensor::zero(2),
        },
        Expectation::Classified(Classification::Triangular),
    );
    add(
        "lperm2-fact-r",
        "e2⊗e1 on lperm2: Yang-Baxter solution with invertible skew part",
        CatalogPayload::AlgebraTensor {
            algebra: lperm2(),
            tensor: TwoTensor::basis(2, 1, 0),
        },
        Expectation::Classified(Classification::Factorizable),
    );
    add(
        "lperm2-pybe-fail",
        "identity-table tensor on lperm2: invariant skew part, Yang-Baxter fails",
        CatalogPayload::AlgebraTensor {
            algebra: lperm2(),
            tensor: TwoTensor::from_entries(
                2,
                &[(0, 0, Scalar::one()), (1, 1, Scalar::one())],
            )
            .expect("valid entries"),
        },
        Expectation::Classified(Classification::NotCoboundarySolution),
    );
    add(
        "nilp2-noninv-r",
        "e1⊗e2 on nilp2: the skew part is not (R,ad)-invariant",
        CatalogPayload::AlgebraTensor {
            algebra: nilp2(),
            tensor: TwoTensor::basis(2, 0, 1),
        },
        Expectation::Classified(Classification::NotCoboundarySolution),
    );

    for (suffix, weight) in [
        ("w0", Scalar::zero()),
        ("w1", Scalar::one()),
        ("wm1", Scalar::from(-1)),
    ] {
        let alg = lperm2();
        let p = first_nontrivial_rb_operator(&alg, &weight, 2)
            .expect("the search finds a nontrivial operator");
        let data = semidirect_quadratic_rb(&alg, &p, &weight).expect("searched operator");
        add(
            &format!("sdqrb-lperm2-{suffix}"),
            "semidirect quadratic Rota-Baxter instance from a searched operator on lperm2",
            CatalogPayload::QuadraticRb(data),
            Expectation::QuadraticRbClean,
        );
    }

    map
}

/// Deep copy of the named entry.
pub fn get(name: &str) -> Result<CatalogEntry> {
    catalog()
        .get(name)
        .cloned()
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

pub fn names() -> Vec<String> {
    catalog().keys().cloned().collect()
}

/// Every entry, in name order.
pub fn all() -> Vec<CatalogEntry> {
    catalog().values().cloned().collect()
}

/// All `(name, algebra)` payloads.
pub fn algebras() -> Vec<(String, PermAlgebra)> {
    all()
        .into_iter()
        .filter_map(|e| match e.payload {
            CatalogPayload::Algebra(a) => Some((e.name, a)),
            _ => None,
        })
        .collect()
}

/// All `(name, bialgebra)` payloads.
pub fn bialgebras() -> Vec<(String, PermBialgebra)> {
    all()
        .into_iter()
        .filter_map(|e| match e.payload {
            CatalogPayload::Bialgebra(b) => Some((e.name, b)),
            _ => None,
        })
        .collect()
}

/// All `(name, algebra, tensor)` payloads.
pub fn tensor_pairs() -> Vec<(String, PermAlgebra, TwoTensor)> {
    all()
        .into_iter()
        .filter_map(|e| match e.payload {
            CatalogPayload::AlgebraTensor { algebra, tensor } => {
                Some((e.name, algebra, tensor))
            }
            _ => None,
        })
        .collect()
}

/// All `(name, data)` quadratic Rota-Baxter payloads.
pub fn quadratic_rb_instances() -> Vec<(String, QuadraticRbData)> {
    all()
        .into_iter()
        .filter_map(|e| match e.payload {
            CatalogPayload::QuadraticRb(d) => Some((e.name, d)),
            _ => None,
        })
        .collect()
}

/// Re-run every advertised check; collects failures instead of panicking.
pub fn verify_all() -> std::result::Result<usize, Vec<String>> {
    let entries = all();
    let failures: Vec<String> = entries
        .iter()
        .filter_map(|e| {
            e.self_check()
                .err()
                .map(|msg| format!("{}: {msg}", e.name))
        })
        .collect();
    if failures.is_empty() {
        Ok(entries.len())
    } else {
        Err(failures)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn get_returns_deep_copies() {
        let a = get("lperm2").unwrap();
        let b = get("lperm2").unwrap();
        assert_eq!(a.name, b.name);
        assert!(matches!(a.payload, CatalogPayload::Algebra(_)));
    }

    #[test]
    fn unknown_name_errors() {
        assert!(matches!(get("no-such-entry"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn every_entry_passes_its_advertised_check() {
        let count = verify_all().expect("all entries verify");
        assert!(count >= 25, "expected a well-stocked catalog, got {count}");
    }

    #[test]
    fn double_nilp2_is_factorizable() {
        let e = get("double-nilp2").unwrap();
        match e.payload {
            CatalogPayload::AlgebraTensor { algebra, tensor } => {
                assert_eq!(algebra.dim(), 4);
                assert_eq!(
                    classify(&algebra, &tensor).unwrap(),
                    Classification::Factorizable
                );
            }
            _ => panic!("unexpected payload"),
        }
    }

    #[test]
    fn expected_names_exist() {
        for name in [
            "zero2",
            "lperm2",
            "nilp2",
            "broken2",
            "bialg-lperm2",
            "double-nilp2",
            "zero2-skew-r",
            "zero3-qt-r",
            "lperm2-sym-r",
            "lperm2-pybe-fail",
            "sdqrb-lperm2-w0",
            "sdqrb-lperm2-w1",
            "sdqrb-lperm2-wm1",
        ] {
            assert!(get(name).is_ok(), "missing catalog entry {name}");
        }
    }

    #[test]
    fn searched_operators_power_the_quadratic_instances() {
        for (name, data) in quadratic_rb_instances() {
            assert!(
                quadratic_rb_defects(&data).is_clean(),
                "unclean instance {name}"
            );
            assert_eq!(data.dim(), 4);
        }
    }
}
