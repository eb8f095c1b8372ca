//! The batch verification run over the catalog.

use std::fmt::Write as _;

use serde::Serialize;

use crate::catalog::{catalog, shape_space, CatalogEntry, Instance, Kind};
use crate::clifford::{build_action, counit_invariants, operator_algebra, InnerAction};
use crate::error::Result;
use crate::gl2::{
    c12_image_invariant, corollary1_check, gl2_equivalent, kmutator_check,
    triangular_diagonal_coincidence, verify_relations, GL2Rep,
};
use crate::io::MatrixJson;
use crate::matrix::{MatSpace, Matrix};
use crate::spinor::{admissibility, commutant_b, commutant_bprime, spinor_equivalent, Orientation};
use crate::{GaussRational, Scalar};

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Restrict the run to one entry.
    pub entry: Option<String>,
    /// Sample point for the numeric cross-check.
    pub q0: GaussRational,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            entry: None,
            q0: GaussRational::int(2),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub kind: String,
    /// `"checked"` or `"unchecked (external reference)"`.
    pub status: String,
    pub relations_ok: Option<bool>,
    pub detq_matches_claim: Option<bool>,
    pub perturbation_nonzero: Option<bool>,
    #[serde(rename = "dim_R_single")]
    pub dim_r_single: Option<usize>,
    #[serde(rename = "dim_R_family")]
    pub dim_r_family: Option<usize>,
    #[serde(rename = "dim_R_claim")]
    pub dim_r_claim: Option<usize>,
    /// Invariant dimension in family mode.
    #[serde(rename = "dim_I")]
    pub dim_i: Option<usize>,
    #[serde(rename = "dim_I_single")]
    pub dim_i_single: Option<usize>,
    #[serde(rename = "dim_I_claim")]
    pub dim_i_claim: Option<usize>,
    pub invariants_shape_matches: Option<bool>,
    pub counit_invariants_agree: Option<bool>,
    pub action_unital: Option<bool>,
    pub corollary1: Option<bool>,
    pub triangular_diagonal: Option<bool>,
    pub c12_image_invariant: Option<bool>,
    pub kmutator_premise: Option<bool>,
    pub epsilon_invertible: Option<bool>,
    pub commutant_b_dim: Option<usize>,
    pub commutant_bprime_dim: Option<usize>,
    pub admissible: Option<bool>,
    pub admissible_claim: Option<bool>,
    pub nilpotent_partner: Option<bool>,
    pub numeric_crosscheck: Option<bool>,
    pub equivalence_class_id: Option<usize>,
    pub discrepancies: Vec<String>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EquivalenceRecord {
    pub left: String,
    pub right: String,
    pub exponents: Vec<i32>,
    pub u: MatrixJson,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub q0: String,
    pub entries: Vec<EntryReport>,
    pub equivalences: Vec<EquivalenceRecord>,
    pub discrepancy_count: usize,
}

impl Report {
    /// 0 when every checked claim is reproduced, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.discrepancy_count > 0)
    }

    pub fn to_table(&self) -> String {
        let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
        let flag = |x: Option<bool>| match x {
            Some(true) => "yes",
            Some(false) => "no",
            None => "-",
        };
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{:<22} {:<4} {:<4} {:<4} {:>12} {:>8} {:<4} {:<5} discrepancies",
            "entry", "rel", "detq", "pert", "dimR s/f/c", "dimI/c", "adm", "class"
        );
        for e in &self.entries {
            let dim_r = format!(
                "{}/{}/{}",
                opt(e.dim_r_single),
                opt(e.dim_r_family),
                opt(e.dim_r_claim)
            );
            let dim_i = format!("{}/{}", opt(e.dim_i), opt(e.dim_i_claim));
            let _ = writeln!(
                s,
                "{:<22} {:<4} {:<4} {:<4} {:>12} {:>8} {:<4} {:<5} {}",
                e.name,
                flag(e.relations_ok),
                flag(e.detq_matches_claim),
                flag(e.perturbation_nonzero),
                dim_r,
                dim_i,
                flag(e.admissible),
                opt(e.equivalence_class_id),
                e.discrepancies.len()
            );
            for d in &e.discrepancies {
                let _ = writeln!(s, "    ! {d}");
            }
            for n in &e.notes {
                let _ = writeln!(s, "    - {n}");
            }
        }
        let _ = writeln!(s, "discrepancies: {}", self.discrepancy_count);
        s
    }
}

fn eval_rep(r: &GL2Rep<Scalar>, q0: &GaussRational) -> Result<GL2Rep<GaussRational>> {
    r.map(|m| m.eval(q0))
}

struct Dims {
    r_single: usize,
    r_family: usize,
    i_single: usize,
    i_family: usize,
}

fn invariant_space<F: crate::ComplexField>(r: &MatSpace<F>) -> MatSpace<F> {
    MatSpace::centralizer(r.n(), &r.basis())
}

fn gl2_dims<F: crate::ComplexField>(single: &GL2Rep<F>, family: &[GL2Rep<F>]) -> Result<Dims> {
    let rs = operator_algebra(std::slice::from_ref(single))?;
    let rf = operator_algebra(family)?;
    Ok(Dims {
        r_single: rs.dim(),
        r_family: rf.dim(),
        i_single: invariant_space(&rs).dim(),
        i_family: invariant_space(&rf).dim(),
    })
}

fn check_gl2(
    entry: &CatalogEntry,
    rep: &GL2Rep<Scalar>,
    q0: &GaussRational,
    out: &mut EntryReport,
) -> Result<()> {
    let q = Scalar::q();
    let claims = &entry.claims;
    let rel = verify_relations(rep, &q);
    out.relations_ok = Some(rel.is_representation());
    if !rel.relations_hold() {
        out.discrepancies.push("GL2 relations fail".into());
    }
    if !rel.detq_invertible {
        out.discrepancies.push("det_q is singular".into());
    }
    if let Some(d) = &claims.detq {
        let ok = &rel.detq == d;
        out.detq_matches_claim = Some(ok);
        if !ok {
            out.discrepancies.push(format!(
                "det_q = {}, claimed {}",
                diag_text(&rel.detq),
                diag_text(d)
            ));
        }
    }
    out.perturbation_nonzero = Some(rel.perturbation_nonzero);
    if let Some(p) = claims.perturbation_nonzero {
        if p != rel.perturbation_nonzero {
            out.discrepancies.push(format!(
                "perturbation nonzero = {}, claimed {p}",
                rel.perturbation_nonzero
            ));
        }
    }

    let family: Vec<GL2Rep<Scalar>> = entry
        .family()?
        .into_iter()
        .filter_map(|i| i.as_gl2().cloned())
        .collect();
    let dims = gl2_dims(rep, &family)?;
    out.dim_r_single = Some(dims.r_single);
    out.dim_r_family = Some(dims.r_family);
    out.dim_r_claim = claims.dim_r;
    out.dim_i_single = Some(dims.i_single);
    out.dim_i = Some(dims.i_family);
    out.dim_i_claim = claims.invariants_dim;
    if dims.r_single != dims.r_family {
        out.notes.push(format!(
            "closure modes differ: dim R single = {}, family = {}",
            dims.r_single, dims.r_family
        ));
    }
    if dims.i_single != dims.i_family {
        out.notes.push(format!(
            "invariant dims differ: single = {}, family = {}",
            dims.i_single, dims.i_family
        ));
    }
    if let Some(c) = claims.dim_r {
        if c != dims.r_family {
            out.discrepancies
                .push(format!("dim R (family) = {}, claimed {c}", dims.r_family));
        }
    }
    if let Some(c) = claims.invariants_dim {
        if c != dims.i_family {
            out.discrepancies
                .push(format!("dim I (family) = {}, claimed {c}", dims.i_family));
        }
    }
    let rf = operator_algebra(&family)?;
    let inv = invariant_space(&rf);
    if let Some(shape) = &claims.invariants_shape {
        let ok = inv == shape_space(shape);
        out.invariants_shape_matches = Some(ok);
        if !ok {
            out.discrepancies
                .push("invariant space does not match the claimed pattern".into());
        }
    }
    if !rf.is_subspace_of(&MatSpace::centralizer(4, &inv.basis())) {
        out.discrepancies
            .push("R is not inside its double centralizer".into());
    }

    let actions: Vec<InnerAction<Scalar>> =
        family.iter().map(build_action).collect::<Result<_>>()?;
    out.action_unital = Some(actions.iter().all(InnerAction::is_unital));
    if out.action_unital == Some(false) {
        out.discrepancies.push("inner action is not unital".into());
    }
    let counit = counit_invariants(&actions);
    let agree = counit == inv;
    out.counit_invariants_agree = Some(agree);
    if !agree {
        out.notes.push(format!(
            "counit cross-check: {{v : c_ij.v = delta_ij v}} has dim {}, centralizer has dim {}",
            counit.dim(),
            inv.dim()
        ));
    }

    let cor = corollary1_check(rep, &q);
    out.corollary1 = Some(cor.passed());
    for f in &cor.failures {
        out.discrepancies
            .push(format!("invertibility/nilpotency: {f}"));
    }
    out.triangular_diagonal = triangular_diagonal_coincidence(rep);
    if out.triangular_diagonal == Some(false) {
        out.discrepancies
            .push("triangular rep with diag(C12 C21) != 0 or diag(C11 C22) != diag(det_q)".into());
    }
    let inv_ok = c12_image_invariant(rep);
    out.c12_image_invariant = Some(inv_ok);
    if !inv_ok {
        out.discrepancies
            .push("image of C12 is not invariant".into());
    }
    let km = kmutator_check(&rep.c11, &rep.c22, 6, &q);
    out.kmutator_premise = Some(km.premise_holds);
    out.epsilon_invertible = Some(km.epsilon_invertible);
    if km.premise_holds && !km.identity_holds() {
        out.discrepancies
            .push("kmutator identity fails under its premise".into());
    }
    if km.epsilon_invertible {
        out.discrepancies
            .push("epsilon = [C11, C22] is invertible".into());
    }

    // numeric cross-check
    let num_single = eval_rep(rep, q0)?;
    let num_family: Vec<_> = family
        .iter()
        .map(|r| eval_rep(r, q0))
        .collect::<Result<_>>()?;
    let nd = gl2_dims(&num_single, &num_family)?;
    let num_rel = verify_relations(&num_single, q0);
    let exact = (
        dims.r_single,
        dims.r_family,
        dims.i_single,
        dims.i_family,
        rel.detq.rank(),
    );
    let numeric = (
        nd.r_single,
        nd.r_family,
        nd.i_single,
        nd.i_family,
        num_rel.detq.rank(),
    );
    let ok = exact == numeric && num_rel.relations_hold() == rel.relations_hold();
    out.numeric_crosscheck = Some(ok);
    if !ok {
        out.discrepancies.push(format!(
            "numeric cross-check at q = {q0}: (dimR s, dimR f, dimI s, dimI f, rank det_q) exact {exact:?}, numeric {numeric:?}"
        ));
    }
    Ok(())
}

fn check_qspinor(
    entry: &CatalogEntry,
    inst: &Instance,
    q0: &GaussRational,
    out: &mut EntryReport,
) -> Result<()> {
    let Instance::QSpinor { rep, bprime } = inst else {
        unreachable!("qspinor entry")
    };
    let q = Scalar::q();
    let ok = rep.check();
    out.relations_ok = Some(ok);
    if !ok {
        out.discrepancies.push("AB != qBA".into());
        return Ok(());
    }
    let cb = commutant_b(&rep.a, &q);
    let cbp = commutant_bprime(&rep.a, &q);
    out.commutant_b_dim = Some(cb.dim());
    out.commutant_bprime_dim = Some(cbp.dim());
    if let Some(bp) = bprime {
        if !cbp.contains(bp) {
            out.discrepancies.push("listed B' is not in B'(A)".into());
        }
    }
    let w = admissibility(&rep.a, &rep.b, &q, Orientation::Default)?;
    out.admissible = Some(w.admissible);
    out.admissible_claim = entry.claims.admissible;
    if let Some(c) = entry.claims.admissible {
        if c != w.admissible {
            out.discrepancies
                .push(format!("admissible = {}, claimed {c}", w.admissible));
        }
    }
    let flipped = admissibility(&rep.a, &rep.b, &q, Orientation::Flipped)?;
    if flipped.admissible != w.admissible {
        out.notes.push(format!(
            "flipped orientation gives admissible = {}",
            flipped.admissible
        ));
    }
    if rep.a.is_invertible() {
        let nil = rep.b.is_nilpotent();
        out.nilpotent_partner = Some(nil);
        if !nil {
            out.discrepancies
                .push("A invertible but B not nilpotent".into());
        }
    }

    let a0 = rep.a.eval(q0)?;
    let b0 = rep.b.eval(q0)?;
    let q0f = q0.clone();
    let w0 = admissibility(&a0, &b0, &q0f, Orientation::Default)?;
    let exact = (cb.dim(), cbp.dim(), w.c_space.dim(), w.admissible);
    let numeric = (
        commutant_b(&a0, &q0f).dim(),
        commutant_bprime(&a0, &q0f).dim(),
        w0.c_space.dim(),
        w0.admissible,
    );
    let ok = exact == numeric;
    out.numeric_crosscheck = Some(ok);
    if !ok {
        out.discrepancies.push(format!(
            "numeric cross-check at q = {q0}: (dim B, dim B', dim C, admissible) exact {exact:?}, numeric {numeric:?}"
        ));
    }
    Ok(())
}

fn diag_text(m: &Matrix<Scalar>) -> String {
    if m.is_diagonal() {
        let d: Vec<String> = m.diagonal().iter().map(ToString::to_string).collect();
        format!("diag({})", d.join(", "))
    } else {
        m.to_string().replace('\n', " ")
    }
}

/// Union of pairwise equivalences; class ids are the position of the first
/// member among `indices`.
fn classes(
    names: &[&str],
    indices: &[usize],
    insts: &[Option<Instance>],
    records: &mut Vec<EquivalenceRecord>,
) -> Result<Vec<(usize, usize)>> {
    let q = Scalar::q();
    let mut class: Vec<usize> = (0..indices.len()).collect();
    for x in 0..indices.len() {
        if class[x] != x {
            continue;
        }
        for y in x + 1..indices.len() {
            if class[y] != y {
                continue;
            }
            let (a, b) = (&insts[indices[x]], &insts[indices[y]]);
            let found = match (a, b) {
                (Some(Instance::Gl2(r1)), Some(Instance::Gl2(r2))) => {
                    gl2_equivalent(r1, r2, &q)?.map(|w| (w.u, w.exponents.to_vec()))
                }
                (
                    Some(Instance::QSpinor { rep: r1, .. }),
                    Some(Instance::QSpinor { rep: r2, .. }),
                ) => spinor_equivalent(r1, r2)?.map(|w| (w.u, vec![w.exponent])),
                _ => None,
            };
            if let Some((u, exponents)) = found {
                class[y] = x;
                records.push(EquivalenceRecord {
                    left: names[indices[x]].to_string(),
                    right: names[indices[y]].to_string(),
                    exponents,
                    u: MatrixJson::from(&u),
                });
            }
        }
    }
    Ok(indices
        .iter()
        .zip(class)
        .map(|(&i, c)| (i, indices[c]))
        .collect())
}

pub fn verify_catalog(opts: &VerifyOptions) -> Result<Report> {
    let all = catalog();
    let selected: Vec<&CatalogEntry> = match &opts.entry {
        Some(name) => vec![all
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| crate::Error::UnknownEntry(name.clone()))?],
        None => all.iter().collect(),
    };
    let names: Vec<&str> = selected.iter().map(|e| e.name).collect();
    let mut insts: Vec<Option<Instance>> = Vec::with_capacity(selected.len());
    let mut entries: Vec<EntryReport> = Vec::with_capacity(selected.len());
    for entry in &selected {
        let mut out = EntryReport {
            name: entry.name.to_string(),
            kind: serde_json::to_value(entry.kind)
                .ok()
                .and_then(|v| v.as_str().map(str::to_string))
                .unwrap_or_default(),
            status: if entry.claims.unchecked {
                "unchecked (external reference)".into()
            } else {
                "checked".into()
            },
            dim_r_claim: entry.claims.dim_r,
            dim_i_claim: entry.claims.invariants_dim,
            ..EntryReport::default()
        };
        let inst = if entry.is_instantiable() {
            Some(entry.instantiate(&[])?)
        } else {
            out.notes.push(entry.note.to_string());
            None
        };
        match (&inst, entry.kind) {
            (Some(Instance::Gl2(rep)), _) => check_gl2(entry, rep, &opts.q0, &mut out)?,
            (Some(i @ Instance::QSpinor { .. }), _) => check_qspinor(entry, i, &opts.q0, &mut out)?,
            (None, Kind::MetadataOnly) => {}
            (None, _) => unreachable!("instantiable kinds always build"),
        }
        insts.push(inst);
        entries.push(out);
    }

    let mut equivalences = Vec::new();
    for kind in [Kind::Qspinor, Kind::Gl2] {
        let idx: Vec<usize> = (0..selected.len())
            .filter(|&i| selected[i].kind == kind && insts[i].is_some())
            .collect();
        for (i, c) in classes(&names, &idx, &insts, &mut equivalences)? {
            entries[i].equivalence_class_id = Some(c);
        }
    }
    for (i, entry) in selected.iter().enumerate() {
        for other in &entry.claims.inequivalent_to {
            let Some(j) = names.iter().position(|n| n == other) else {
                continue;
            };
            if entries[i].equivalence_class_id.is_some()
                && entries[i].equivalence_class_id == entries[j].equivalence_class_id
            {
                let witness = equivalences
                    .iter()
                    .find(|r| {
                        (r.left == entry.name && r.right == *other)
                            || (r.left == *other && r.right == entry.name)
                    })
                    .map(|r| {
                        format!(
                            " (witness exponents {:?}, u = {:?})",
                            r.exponents, r.u.entries
                        )
                    })
                    .unwrap_or_default();
                entries[i].discrepancies.push(format!(
                    "claimed inequivalent to {other}, but equivalent{witness}"
                ));
            }
        }
    }

    let discrepancy_count = entries
        .iter()
        .filter(|e| e.status == "checked")
        .map(|e| e.discrepancies.len())
        .sum();
    Ok(Report {
        q0: opts.q0.to_string(),
        entries,
        equivalences,
        discrepancy_count,
    })
}
