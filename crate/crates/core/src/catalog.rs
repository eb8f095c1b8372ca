//! Every explicit representation used in the verification suite, with
//! parameter slots and the claimed properties each one is checked against.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gl2::{verify_relations, GL2Rep};
use crate::io::{mat_serde, opt_mat_serde};
use crate::spinor::{check_spinor, QSpinorRep};
use crate::{GaussRational, Mat, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Qspinor,
    Gl2,
    /// Claimed data only; the matrices are not available.
    MetadataOnly,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ParamSpec {
    pub name: &'static str,
    #[serde(serialize_with = "ser_display")]
    pub default: GaussRational,
    /// Reason the parameter must be nonzero, if it must.
    pub nonzero: Option<&'static str>,
}

fn ser_display<S: serde::Serializer>(g: &GaussRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&g.to_string())
}

/// Claimed properties. `None` means no claim.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Claims {
    #[serde(with = "opt_mat_serde")]
    pub detq: Option<Mat>,
    pub dim_r: Option<usize>,
    pub invariants_dim: Option<usize>,
    /// Rows of `*`/`0`: the invariant space is spanned by the matrix units
    /// at the `*` positions.
    pub invariants_shape: Option<[&'static str; 4]>,
    pub admissible: Option<bool>,
    pub perturbation_nonzero: Option<bool>,
    /// Entries claimed to be inequivalent to this one.
    pub inequivalent_to: Vec<&'static str>,
    /// Claims that cannot be checked from the available data.
    pub unchecked: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Instance {
    QSpinor {
        rep: QSpinorRep<Scalar>,
        bprime: Option<Mat>,
    },
    Gl2(GL2Rep<Scalar>),
}

impl Instance {
    pub fn as_gl2(&self) -> Option<&GL2Rep<Scalar>> {
        match self {
            Instance::Gl2(r) => Some(r),
            Instance::QSpinor { .. } => None,
        }
    }

    pub fn as_qspinor(&self) -> Option<&QSpinorRep<Scalar>> {
        match self {
            Instance::QSpinor { rep, .. } => Some(rep),
            Instance::Gl2(_) => None,
        }
    }

    /// Whether this instance satisfies its defining relations (and, for GL₂,
    /// has invertible `det_q`).
    pub fn is_valid(&self) -> bool {
        match self {
            Instance::QSpinor { rep, .. } => check_spinor(&rep.a, &rep.b, &rep.q).unwrap_or(false),
            Instance::Gl2(r) => verify_relations(r, &Scalar::q()).is_representation(),
        }
    }
}

/// Parameter assignment for one instantiation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params(BTreeMap<&'static str, GaussRational>);

impl Params {
    pub fn get(&self, name: &str) -> Scalar {
        Scalar::constant(self.0[name].clone())
    }

    pub fn raw(&self, name: &str) -> &GaussRational {
        &self.0[name]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&&'static str, &GaussRational)> {
        self.0.iter()
    }
}

type Builder = fn(&Params) -> Result<Instance>;

#[derive(Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub kind: Kind,
    pub params: Vec<ParamSpec>,
    pub claims: Claims,
    pub note: &'static str,
    build: Option<Builder>,
}

impl std::fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CatalogEntry")
            .field("name", &self.name)
            .field("kind", &self.kind)
            .finish_non_exhaustive()
    }
}

impl CatalogEntry {
    pub fn is_instantiable(&self) -> bool {
        self.build.is_some()
    }

    pub fn default_params(&self) -> Params {
        Params(
            self.params
                .iter()
                .map(|p| (p.name, p.default.clone()))
                .collect(),
        )
    }

    fn check_params(&self, params: &Params) -> Result<()> {
        for p in &self.params {
            if let Some(reason) = p.nonzero {
                if params.raw(p.name).is_zero() {
                    return Err(Error::ForbiddenParameter {
                        param: p.name.to_string(),
                        value: "0".to_string(),
                        reason: reason.to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn build_with(&self, params: &Params) -> Result<Instance> {
        let build = self
            .build
            .ok_or_else(|| Error::MetadataOnly(self.name.to_string()))?;
        self.check_params(params)?;
        build(params)
    }

    /// Instantiates with `overrides` replacing the defaults.
    pub fn instantiate(&self, overrides: &[(&str, GaussRational)]) -> Result<Instance> {
        let mut params = self.default_params();
        for (name, value) in overrides {
            let Some(spec) = self.params.iter().find(|p| p.name == *name) else {
                return Err(Error::UnknownParameter {
                    entry: self.name.to_string(),
                    param: name.to_string(),
                });
            };
            params.0.insert(spec.name, value.clone());
        }
        self.build_with(&params)
    }

    /// One instance per parameter basis vector (parameter `k` set to 1, the
    /// others to 0). An instantiation that is forbidden, fails to build or
    /// is not a valid representation is replaced by the distinct nonzero
    /// values `value_j = 1 + ((j + k) mod P)`. Entries without parameters
    /// yield their single default instance.
    pub fn family(&self) -> Result<Vec<Instance>> {
        let p = self.params.len();
        if p == 0 {
            return Ok(vec![self.instantiate(&[])?]);
        }
        (0..p)
            .map(|k| {
                let unit = Params(
                    self.params
                        .iter()
                        .enumerate()
                        .map(|(j, s)| (s.name, GaussRational::int(i64::from(j == k))))
                        .collect(),
                );
                match self.build_with(&unit) {
                    Ok(inst) if inst.is_valid() => Ok(inst),
                    _ => {
                        let fallback = Params(
                            self.params
                                .iter()
                                .enumerate()
                                .map(|(j, s)| {
                                    (s.name, GaussRational::int(1 + ((j + k) % p) as i64))
                                })
                                .collect(),
                        );
                        self.build_with(&fallback)
                    }
                }
            })
            .collect()
    }
}

fn q() -> Scalar {
    Scalar::q()
}

fn qp(k: i32) -> Scalar {
    Scalar::q_pow(k)
}

fn int(k: i64) -> Scalar {
    Scalar::constant(GaussRational::int(k))
}

/// Matrix unit with one-based indices.
fn e(i: usize, j: usize) -> Mat {
    Mat::unit(4, i - 1, j - 1)
}

fn diag(d: [Scalar; 4]) -> Mat {
    Mat::diag(d.to_vec())
}

/// Upper Jordan block.
fn jordan(lambda: Scalar, k: usize) -> Mat {
    let mut m = Mat::diag(vec![lambda; k]);
    for i in 0..k - 1 {
        m[(i, i + 1)] = Scalar::one();
    }
    m
}

fn blocks(parts: &[Mat]) -> Mat {
    Mat::block_diag(parts)
}

fn scalar1(x: Scalar) -> Mat {
    Mat::diag(vec![x])
}

fn sum(terms: &[(Scalar, Mat)]) -> Mat {
    terms
        .iter()
        .fold(Mat::zero(4), |acc, (c, m)| &acc + &m.scale(c))
}

fn spinor(a: Mat, b: Mat, bprime: Option<Mat>) -> Result<Instance> {
    Ok(Instance::QSpinor {
        rep: QSpinorRep::new(a, b, q())?,
        bprime,
    })
}

fn gl2(c11: Mat, c12: Mat, c21: Mat, c22: Mat) -> Result<Instance> {
    Ok(Instance::Gl2(GL2Rep::new(c11, c12, c21, c22)?))
}

fn inv(x: Scalar) -> Result<Scalar> {
    Scalar::one().try_div(&x)
}

fn case1_diag() -> Mat {
    diag([qp(2), q(), q(), int(1)])
}

fn param(name: &'static str, default: i64, nonzero: Option<&'static str>) -> ParamSpec {
    ParamSpec {
        name,
        default: GaussRational::int(default),
        nonzero,
    }
}

const MU_NONZERO: &str = "mu = 0 kills the perturbation";

fn rejected(name: &'static str, note: &'static str, build: Builder) -> CatalogEntry {
    rejected_with(name, note, Vec::new(), build)
}

fn rejected_with(
    name: &'static str,
    note: &'static str,
    params: Vec<ParamSpec>,
    build: Builder,
) -> CatalogEntry {
    CatalogEntry {
        name,
        kind: Kind::Qspinor,
        params,
        claims: Claims {
            admissible: Some(false),
            ..Claims::default()
        },
        note,
        build: Some(build),
    }
}

/// The full catalog in its fixed order.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut out = vec![
        CatalogEntry {
            name: "thm1-case1",
            kind: Kind::Qspinor,
            params: vec![param("mu", 1, Some(MU_NONZERO))],
            claims: Claims {
                admissible: Some(true),
                inequivalent_to: vec!["thm1-case2"],
                ..Claims::default()
            },
            note: "A = diag(q^2, q, q, 1), B = q*e13 - mu*e24, B' = e43 - mu*e21",
            build: Some(|p| {
                let mu = p.get("mu");
                spinor(
                    case1_diag(),
                    sum(&[(q(), e(1, 3)), (-mu.clone(), e(2, 4))]),
                    Some(sum(&[(int(1), e(4, 3)), (-mu, e(2, 1))])),
                )
            }),
        },
        CatalogEntry {
            name: "thm1-case2",
            kind: Kind::Qspinor,
            params: vec![param("mu", 1, Some(MU_NONZERO))],
            claims: Claims {
                admissible: Some(true),
                inequivalent_to: vec!["thm1-case1"],
                ..Claims::default()
            },
            note: "A = diag(q^2, q, q, 1), B = q*e12 + mu*e34, B' = e42 + mu*e31",
            build: Some(|p| {
                let mu = p.get("mu");
                spinor(
                    case1_diag(),
                    sum(&[(q(), e(1, 2)), (mu.clone(), e(3, 4))]),
                    Some(sum(&[(int(1), e(4, 2)), (mu, e(3, 1))])),
                )
            }),
        },
        CatalogEntry {
            name: "thm1-case3",
            kind: Kind::Qspinor,
            params: vec![param("beta1", 1, None), param("beta2", 1, None)],
            claims: Claims {
                admissible: Some(true),
                ..Claims::default()
            },
            note: "A = diag(J(q,2), q^2, 1), B = beta1*e14 + beta2*e32, \
                   B' = beta1*e13 + beta2*e42. Admissibility needs both summands: \
                   with B = e14 alone every admissible C has C*B = 0.",
            build: Some(|p| {
                let (b1, b2) = (p.get("beta1"), p.get("beta2"));
                spinor(
                    blocks(&[jordan(q(), 2), scalar1(qp(2)), scalar1(int(1))]),
                    sum(&[(b1.clone(), e(1, 4)), (b2.clone(), e(3, 2))]),
                    Some(sum(&[(b1, e(1, 3)), (b2, e(4, 2))])),
                )
            }),
        },
        rejected_with(
            "rej-diag-a",
            "diagonal A with alpha1 = q*alpha2, alpha3 = q; B = e12 + e34",
            vec![param("alpha2", 5, Some("A must be invertible"))],
            |p| {
                let a2 = p.get("alpha2");
                spinor(
                    diag([q() * a2.clone(), a2, q(), int(1)]),
                    &e(1, 2) + &e(3, 4),
                    None,
                )
            },
        ),
        rejected(
            "rej-diag-b",
            "diagonal A with alpha1 = alpha2 = alpha3 = q; B = e14 + e24 + e34",
            |_| {
                spinor(
                    diag([q(), q(), q(), int(1)]),
                    &(&e(1, 4) + &e(2, 4)) + &e(3, 4),
                    None,
                )
            },
        ),
        rejected(
            "rej-jordan3-qinv",
            "A = J(q^-1, 3) + (1), B(A) = C*e43",
            |_| spinor(blocks(&[jordan(qp(-1), 3), scalar1(int(1))]), e(4, 3), None),
        ),
        rejected("rej-jordan3-q", "A = J(q, 3) + (1), B(A) = C*e14", |_| {
            spinor(blocks(&[jordan(q(), 3), scalar1(int(1))]), e(1, 4), None)
        }),
        rejected_with(
            "rej-generic-eps",
            "A = diag(J(eps, 2), q, 1) with eps not in {q^-1, 1, q, q^2}, B = e34",
            vec![param("eps", 5, Some("A must be invertible"))],
            |p| {
                spinor(
                    blocks(&[jordan(p.get("eps"), 2), scalar1(q()), scalar1(int(1))]),
                    e(3, 4),
                    None,
                )
            },
        ),
        rejected(
            "rej-poss1",
            "A = diag(q^2, q, 1, 1) + e34, B = e24 + e12",
            |_| {
                spinor(
                    &diag([qp(2), q(), int(1), int(1)]) + &e(3, 4),
                    &e(2, 4) + &e(1, 2),
                    Some(&e(2, 1) + &e(3, 2)),
                )
            },
        ),
        rejected(
            "rej-poss2",
            "A = diag(J(1, 2), q, 1), B = e32 + e34",
            |_| {
                spinor(
                    blocks(&[jordan(int(1), 2), scalar1(q()), scalar1(int(1))]),
                    &e(3, 2) + &e(3, 4),
                    None,
                )
            },
        ),
        rejected(
            "rej-poss3",
            "A = diag(J(q, 2), q, 1), B = e14 + e34",
            |_| {
                spinor(
                    blocks(&[jordan(q(), 2), scalar1(q()), scalar1(int(1))]),
                    &e(1, 4) + &e(3, 4),
                    None,
                )
            },
        ),
        rejected(
            "rej-poss4",
            "A = diag(J(q^2, 2), q, 1), B = e13 + e34",
            |_| {
                spinor(
                    blocks(&[jordan(qp(2), 2), scalar1(q()), scalar1(int(1))]),
                    &e(1, 3) + &e(3, 4),
                    None,
                )
            },
        ),
        rejected_with(
            "rej-case-iv",
            "A = diag(J(q, 2), 1, 1), B = beta11*e13 + beta12*e14",
            vec![param("beta11", 1, None), param("beta12", 2, None)],
            |p| {
                spinor(
                    blocks(&[jordan(q(), 2), jordan(int(1), 1), scalar1(int(1))]),
                    sum(&[(p.get("beta11"), e(1, 3)), (p.get("beta12"), e(1, 4))]),
                    None,
                )
            },
        ),
        rejected(
            "rej-both-jordan-q",
            "A = diag(J(q, 2), J(1, 2)), B = e13 + 2*e14 + q*e24",
            |_| {
                spinor(
                    blocks(&[jordan(q(), 2), jordan(int(1), 2)]),
                    sum(&[(int(1), e(1, 3)), (int(2), e(1, 4)), (q(), e(2, 4))]),
                    None,
                )
            },
        ),
        rejected(
            "rej-both-jordan-qinv",
            "A = diag(J(q^-1, 2), J(1, 2)), B = e31 + 2*e32 + q*e42",
            |_| {
                spinor(
                    blocks(&[jordan(qp(-1), 2), jordan(int(1), 2)]),
                    sum(&[(int(1), e(3, 1)), (int(2), e(3, 2)), (q(), e(4, 2))]),
                    None,
                )
            },
        ),
    ];
    out.extend(gl2_entries());
    out
}

fn gl2_entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "sec5-case1",
            kind: Kind::Gl2,
            params: vec![param("mu", 1, Some(MU_NONZERO))],
            claims: Claims {
                detq: Some(case1_diag()),
                dim_r: Some(9),
                invariants_dim: Some(1),
                perturbation_nonzero: Some(true),
                inequivalent_to: vec!["sec5-case2"],
                ..Claims::default()
            },
            note: "C11 = diag(1, q^-1, 1, q^-1), C12 = q*e13 - mu*e24, C21 = -mu*e21 + e43, \
                   C22 = diag(q^2, q^2, q, q) - q*mu*e23",
            build: Some(|p| {
                let mu = p.get("mu");
                gl2(
                    diag([int(1), qp(-1), int(1), qp(-1)]),
                    sum(&[(q(), e(1, 3)), (-mu.clone(), e(2, 4))]),
                    sum(&[(-mu.clone(), e(2, 1)), (int(1), e(4, 3))]),
                    &diag([qp(2), qp(2), q(), q()]) - &e(2, 3).scale(&(q() * mu)),
                )
            }),
        },
        CatalogEntry {
            name: "sec5-case2",
            kind: Kind::Gl2,
            params: vec![param("mu", 1, Some(MU_NONZERO))],
            claims: Claims {
                detq: Some(case1_diag()),
                dim_r: Some(9),
                invariants_dim: Some(1),
                perturbation_nonzero: Some(true),
                inequivalent_to: vec!["sec5-case1"],
                ..Claims::default()
            },
            note: "C11 = diag(1, 1, q^-1, q^-1), C12 = q*e12 + mu*e34, C21 = mu*e31 + e42, \
                   C22 = diag(q^2, q, q^2, q) + q*mu*e32",
            build: Some(|p| {
                let mu = p.get("mu");
                gl2(
                    diag([int(1), int(1), qp(-1), qp(-1)]),
                    sum(&[(q(), e(1, 2)), (mu.clone(), e(3, 4))]),
                    sum(&[(mu.clone(), e(3, 1)), (int(1), e(4, 2))]),
                    &diag([qp(2), q(), qp(2), q()]) + &e(3, 2).scale(&(q() * mu)),
                )
            }),
        },
        CatalogEntry {
            name: "sec5-item-c",
            kind: Kind::Gl2,
            params: vec![
                param("alpha", 1, None),
                param("beta", 2, None),
                param("gamma", 3, None),
            ],
            claims: Claims {
                detq: Some(diag([qp(2), q(), int(1), int(1)])),
                dim_r: Some(8),
                invariants_dim: Some(1),
                perturbation_nonzero: Some(false),
                ..Claims::default()
            },
            note: "C11 = 1, C12 = alpha*e12 + beta*e23 + gamma*e24, C21 = 0, \
                   C22 = diag(q^2, q, 1, 1). The claimed dim R = 8 is reached by the \
                   family of instances, not by a single generic one.",
            build: Some(|p| {
                gl2(
                    Mat::identity(4),
                    sum(&[
                        (p.get("alpha"), e(1, 2)),
                        (p.get("beta"), e(2, 3)),
                        (p.get("gamma"), e(2, 4)),
                    ]),
                    Mat::zero(4),
                    diag([qp(2), q(), int(1), int(1)]),
                )
            }),
        },
        CatalogEntry {
            name: "sec5-item-d",
            kind: Kind::Gl2,
            params: vec![
                param("alpha2", 1, Some("C22 contains alpha2^-1")),
                param("alpha3", 2, Some("C22 contains alpha3^-1")),
            ],
            claims: Claims {
                detq: Some(case1_diag()),
                dim_r: Some(3),
                invariants_dim: Some(6),
                invariants_shape: Some(["*000", "0**0", "0**0", "000*"]),
                perturbation_nonzero: Some(false),
                ..Claims::default()
            },
            note: "C11 = diag(1, alpha1, m*alpha2, alpha3), C22 = diag(q^2, q/alpha1, 1/alpha2, \
                   1/alpha3), C12 = C21 = 0. The printed factor m is undefined; it is read as q \
                   and alpha1 = q*alpha2 is imposed, so that det_q = diag(q^2, q, q, 1) slotwise \
                   and slots 2 and 3 coincide as the claimed R pattern requires. Treating m as \
                   a free parameter contradicts the stated det_q and is rejected.",
            build: Some(|p| {
                let (a2, a3) = (p.get("alpha2"), p.get("alpha3"));
                let a1 = q() * a2.clone();
                gl2(
                    diag([int(1), a1.clone(), q() * a2.clone(), a3.clone()]),
                    Mat::zero(4),
                    Mat::zero(4),
                    diag([qp(2), q().try_div(&a1)?, inv(a2)?, inv(a3)?]),
                )
            }),
        },
        CatalogEntry {
            name: "sec5-item-e",
            kind: Kind::MetadataOnly,
            params: Vec::new(),
            claims: Claims {
                dim_r: Some(6),
                invariants_dim: Some(2),
                unchecked: true,
                ..Claims::default()
            },
            note: "d = diag(alpha, q^2, q, 1) with alpha not in {0, q^-1, 1, q, q^2, q^3}; \
                   invariants C + C. Matrices not available.",
            build: None,
        },
        CatalogEntry {
            name: "sec5-item-f",
            kind: Kind::MetadataOnly,
            params: Vec::new(),
            claims: Claims {
                detq: Some(diag([qp(3), qp(2), q(), int(1)])),
                dim_r: Some(7),
                invariants_dim: Some(1),
                unchecked: true,
                ..Claims::default()
            },
            note: "d = diag(q^3, q^2, q, 1); invariants C. Matrices not available.",
            build: None,
        },
    ]
}

pub fn entry(name: &str) -> Result<CatalogEntry> {
    catalog()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownEntry(name.to_string()))
}

pub fn instantiate(name: &str, overrides: &[(&str, GaussRational)]) -> Result<Instance> {
    entry(name)?.instantiate(overrides)
}

/// The matrix space spanned by the units at the `*` positions of `shape`.
pub fn shape_space(shape: &[&str; 4]) -> crate::MatSpace {
    let mut units = Vec::new();
    for (i, row) in shape.iter().enumerate() {
        for (j, c) in row.chars().enumerate() {
            if c == '*' {
                units.push(Mat::unit(4, i, j));
            }
        }
    }
    crate::MatSpace::span(4, &units)
}

#[derive(Serialize)]
struct MatrixSet {
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    matrices: BTreeMap<&'static str, MatWrap>,
}

#[derive(Serialize)]
struct MatWrap(#[serde(with = "mat_serde")] Mat);

#[derive(Serialize)]
struct BundleEntry<'a> {
    name: &'static str,
    kind: Kind,
    params: &'a [ParamSpec],
    note: &'static str,
    claims: &'a Claims,
    #[serde(flatten)]
    default_instance: MatrixSet,
}

/// The catalog as JSON: entries, default matrices and claims.
pub fn export_bundle() -> Result<serde_json::Value> {
    let cat = catalog();
    let mut entries = Vec::with_capacity(cat.len());
    for e in &cat {
        let mut matrices = BTreeMap::new();
        if e.is_instantiable() {
            match e.instantiate(&[])? {
                Instance::QSpinor { rep, bprime } => {
                    matrices.insert("a", MatWrap(rep.a));
                    matrices.insert("b", MatWrap(rep.b));
                    if let Some(bp) = bprime {
                        matrices.insert("bprime", MatWrap(bp));
                    }
                }
                Instance::Gl2(r) => {
                    matrices.insert("detq", MatWrap(r.detq()));
                    matrices.insert("c11", MatWrap(r.c11));
                    matrices.insert("c12", MatWrap(r.c12));
                    matrices.insert("c21", MatWrap(r.c21));
                    matrices.insert("c22", MatWrap(r.c22));
                }
            }
        }
        entries.push(BundleEntry {
            name: e.name,
            kind: e.kind,
            params: &e.params,
            note: e.note,
            claims: &e.claims,
            default_instance: MatrixSet { matrices },
        });
    }
    Ok(serde_json::json!({ "entries": serde_json::to_value(entries).expect("bundle serializes") }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinor::{admissibility, commutant_bprime, Orientation};

    #[test]
    fn names_are_unique_and_ordered() {
        let names: Vec<_> = catalog().iter().map(|e| e.name).collect();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len());
        assert_eq!(names[0], "thm1-case1");
        assert_eq!(names.last(), Some(&"sec5-item-f"));
        assert!(names.iter().filter(|n| n.starts_with("rej-")).count() >= 6);
    }

    #[test]
    fn transcribed_defaults() {
        let Instance::QSpinor { rep, bprime } = instantiate("thm1-case1", &[]).unwrap() else {
            panic!()
        };
        assert_eq!(rep.a, diag([qp(2), q(), q(), int(1)]));
        assert_eq!(rep.b, &e(1, 3).scale(&q()) - &e(2, 4));
        assert_eq!(bprime.unwrap(), &e(4, 3) - &e(2, 1));

        let r = instantiate("sec5-case2", &[]).unwrap();
        let r = r.as_gl2().unwrap();
        assert_eq!(r.c21, &e(3, 1) + &e(4, 2));
        assert_eq!(
            r.c22,
            &diag([qp(2), q(), qp(2), q()]) + &e(3, 2).scale(&q())
        );

        let r = instantiate("sec5-item-d", &[]).unwrap();
        assert_eq!(r.as_gl2().unwrap().c11, diag([int(1), q(), q(), int(2)]));
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(
            instantiate("nope", &[]),
            Err(Error::UnknownEntry(_))
        ));
        assert!(matches!(
            instantiate("sec5-case1", &[("nu", GaussRational::int(1))]),
            Err(Error::UnknownParameter { .. })
        ));
        assert!(matches!(
            instantiate("sec5-case1", &[("mu", GaussRational::int(0))]),
            Err(Error::ForbiddenParameter { .. })
        ));
        assert!(matches!(
            instantiate("sec5-item-e", &[]),
            Err(Error::MetadataOnly(_))
        ));
        let r = instantiate("sec5-case1", &[("mu", GaussRational::int(2))]).unwrap();
        assert_eq!(
            r.as_gl2().unwrap().c12,
            &e(1, 3).scale(&q()) - &e(2, 4).scale(&int(2))
        );
    }

    #[test]
    fn every_instance_is_valid_and_matches_claims() {
        for entry in catalog().iter().filter(|e| e.is_instantiable()) {
            let inst = entry.instantiate(&[]).unwrap();
            assert!(inst.is_valid(), "{}", entry.name);
            match &inst {
                Instance::Gl2(r) => {
                    let rep = verify_relations(r, &q());
                    assert_eq!(
                        Some(&rep.detq),
                        entry.claims.detq.as_ref(),
                        "{}",
                        entry.name
                    );
                    assert_eq!(
                        Some(rep.perturbation_nonzero),
                        entry.claims.perturbation_nonzero
                    );
                }
                Instance::QSpinor { rep, bprime } => {
                    let w = admissibility(&rep.a, &rep.b, &q(), Orientation::Default).unwrap();
                    assert_eq!(
                        Some(w.admissible),
                        entry.claims.admissible,
                        "{}",
                        entry.name
                    );
                    if let Some(bp) = bprime {
                        assert!(
                            commutant_bprime(&rep.a, &q()).contains(bp),
                            "{}",
                            entry.name
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn family_instances() {
        let fam = entry("sec5-item-c").unwrap().family().unwrap();
        assert_eq!(fam.len(), 3);
        assert_eq!(fam[1].as_gl2().unwrap().c12, e(2, 3));
        let fam = entry("sec5-item-d").unwrap().family().unwrap();
        let c11: Vec<_> = fam
            .iter()
            .map(|i| i.as_gl2().unwrap().c11.clone())
            .collect();
        assert_eq!(c11[0], diag([int(1), q(), q(), int(2)]));
        assert_eq!(c11[1], diag([int(1), q() * int(2), q() * int(2), int(1)]));
        assert_eq!(entry("rej-poss1").unwrap().family().unwrap().len(), 1);
    }

    #[test]
    fn shape_pattern() {
        let s = shape_space(&["*000", "0**0", "0**0", "000*"]);
        assert_eq!(s.dim(), 6);
        assert!(s.contains(&e(2, 3)) && !s.contains(&e(1, 2)));
    }

    #[test]
    fn bundle_round_trips_matrices() {
        let v = export_bundle().unwrap();
        let entries = v["entries"].as_array().unwrap();
        assert_eq!(entries.len(), catalog().len());
        let c1 = entries.iter().find(|e| e["name"] == "sec5-case1").unwrap();
        let m = crate::io::mat_from_json_str(&c1["matrices"]["c22"].to_string()).unwrap();
        assert_eq!(
            m,
            instantiate("sec5-case1", &[])
                .unwrap()
                .as_gl2()
                .unwrap()
                .c22
        );
        assert_eq!(c1["claims"]["dim_r"], 9);
    }
}
