//! Enumeration of admissible conjugacy-class intersection vectors.
//!
//! Given a character table and primitive parameters with integral √Δ, every
//! class gets either a forced value (classes outside the kernel
//! intersection N, where the weighted count k − θ_α divides out) or a
//! residue constraint from the prime powers of √Δ. All vectors meeting the
//! per-class constraints, the inverse-pairing symmetry and Σd = k are then
//! enumerated and filtered through the full character-value conditions.
//! The dual enumeration over eigenspace-dimension assignments (one per
//! irreducible) covers tables where the modular route says nothing.

use serde::{Deserialize, Serialize};

use crate::chartab::CharacterTable;
use crate::cyclotomic::{cyclo_sum, Cyclotomic};
use crate::sieves::{self, LinearCharContext, ResidueConstraint, SieveVerdict, Witness};
use crate::srg::{SqrtDelta, SrgParams};

/// Allowed values for one class, with the rule that produced them.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassConstraint {
    pub class: usize,
    pub allowed: Vec<i64>,
    pub rule: ConstraintRule,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConstraintRule {
    IdentityPinned,
    /// forced by the weighted-count theorem on classes outside N
    ValuePhi { theta_alpha: Vec<i64> },
    /// arithmetic progression when both eigenvalue branches are integral
    Progression { residue: u64, modulus: u64 },
    /// residue constraint from the shared prime powers of √Δ
    Residue { residue: u64, modulus: u64 },
}

#[derive(Debug, Clone)]
pub struct Constraints {
    pub per_class: Vec<ClassConstraint>,
    pub context: Option<LinearCharContext>,
}

/// Builds the per-class constraint set; an `Err` is a certified
/// infeasibility with its witness.
pub fn build_constraints(
    t: &CharacterTable,
    params: &SrgParams,
) -> Result<Constraints, SieveVerdict> {
    let e = params.eigendata().map_err(|err| {
        SieveVerdict::infeasible(Witness::Integrality { params: *params, reason: err.to_string() })
    })?;
    let SqrtDelta::Integral(s) = e.sqrt_delta else {
        return Err(SieveVerdict::unresolved(Witness::Inapplicable {
            rule: "class-intersections".into(),
            reason: "irrational √Δ".into(),
        }));
    };
    let r = t.num_classes();
    let ctx = sieves::linear_context(t, s);
    let branches = ctx
        .as_ref()
        .map(|ctx| sieves::value_phi_constraints(t, ctx, params, &e));
    if let Some(branches) = &branches {
        if !branches[0].alive && !branches[1].alive {
            return Err(SieveVerdict::infeasible(Witness::NoBranch {
                params: *params,
                detail: format!(
                    "neither (k−θ₁) = {} nor (k−θ₂) = {} yields integral in-range values \
                     on every class outside N",
                    params.k - e.theta1,
                    params.k - e.theta2
                ),
            }));
        }
    }
    let mut per_class = Vec::with_capacity(r);
    for j in 0..r {
        let size = t.classes.sizes[j] as i64;
        let crt = sieves::modular_phi(t.classes.centralizer_orders[j], params, &e);
        let constraint = if j == 0 {
            ClassConstraint { class: 0, allowed: vec![0], rule: ConstraintRule::IdentityPinned }
        } else if let (Some(ctx), Some(branches)) = (&ctx, &branches) {
            if !ctx.in_n[j] {
                let mut alive_thetas = Vec::new();
                let mut values = Vec::new();
                for b in branches.iter().filter(|b| b.alive) {
                    if let Some(vv) = b.forced[j] {
                        alive_thetas.push(b.theta_alpha);
                        if !values.contains(&vv) {
                            values.push(vv);
                        }
                    }
                }
                // a forced value must also meet the residue constraint
                values.retain(|&vv| crt.allows(vv));
                values.sort_unstable();
                if values.len() == 2 {
                    // both branches integral: record the full arithmetic
                    // progression with step √Δ/|C_G(h)|
                    let step = (s / t.classes.centralizer_orders[j] as i64).unsigned_abs();
                    debug_assert_eq!((values[1] - values[0]).unsigned_abs(), step);
                    let residue = values[1].rem_euclid(step as i64) as u64;
                    let allowed: Vec<i64> =
                        (0..=size).filter(|&c| c as u64 % step == residue).collect();
                    ClassConstraint {
                        class: j,
                        allowed,
                        rule: ConstraintRule::Progression { residue, modulus: step },
                    }
                } else {
                    ClassConstraint {
                        class: j,
                        allowed: values,
                        rule: ConstraintRule::ValuePhi { theta_alpha: alive_thetas },
                    }
                }
            } else {
                residue_constraint(j, size, &crt)
            }
        } else {
            residue_constraint(j, size, &crt)
        };
        if constraint.allowed.is_empty() {
            return Err(SieveVerdict::infeasible(Witness::EmptyClass {
                class: j,
                detail: format!(
                    "size {size}, rule {:?}: no admissible intersection value",
                    constraint.rule
                ),
            }));
        }
        per_class.push(constraint);
    }
    Ok(Constraints { per_class, context: ctx })
}

fn residue_constraint(j: usize, size: i64, crt: &ResidueConstraint) -> ClassConstraint {
    let allowed: Vec<i64> = (0..=size).filter(|&c| crt.allows(c)).collect();
    ClassConstraint {
        class: j,
        allowed,
        rule: ConstraintRule::Residue { residue: crt.residue, modulus: crt.modulus },
    }
}

/// Complete, duplicate-free enumeration of the vectors meeting the
/// per-class constraints, the inverse-pairing symmetry d_j = d_{j*}, and
/// Σ d_j = k, in lexicographic order over the canonical class order.
pub fn enumerate_vectors(
    constraints: &Constraints,
    classes: &crate::chartab::ClassInfo,
    k: i64,
) -> Vec<Vec<i64>> {
    let r = constraints.per_class.len();
    // representatives: real classes alone, one of each inverse pair
    let mut slots: Vec<(usize, Vec<i64>, i64)> = Vec::new(); // (class, allowed, weight)
    for j in 0..r {
        let jstar = classes.inverse_class[j];
        if jstar < j {
            continue;
        }
        let mut allowed = constraints.per_class[j].allowed.clone();
        if jstar != j {
            allowed.retain(|v| constraints.per_class[jstar].allowed.contains(v));
        } else if classes.rep_orders[j] > 2 {
            // a real non-involution class pairs up internally: even counts
            allowed.retain(|v| v % 2 == 0);
        }
        let weight = if jstar == j { 1 } else { 2 };
        slots.push((j, allowed, weight));
    }
    // suffix bounds for pruning
    let n = slots.len();
    let mut min_suffix = vec![0i64; n + 1];
    let mut max_suffix = vec![0i64; n + 1];
    for i in (0..n).rev() {
        let (_, allowed, w) = &slots[i];
        let lo = allowed.first().copied().unwrap_or(0) * w;
        let hi = allowed.last().copied().unwrap_or(-1) * w;
        min_suffix[i] = min_suffix[i + 1] + lo;
        max_suffix[i] = max_suffix[i + 1] + hi;
    }
    fn rec(
        slots: &[(usize, Vec<i64>, i64)],
        min_suffix: &[i64],
        max_suffix: &[i64],
        k: i64,
        i: usize,
        sum: i64,
        current: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if i == slots.len() {
            if sum == k {
                out.push(current.clone());
            }
            return;
        }
        for &val in &slots[i].1 {
            let s = sum + val * slots[i].2;
            if s + min_suffix[i + 1] > k || s + max_suffix[i + 1] < k {
                continue;
            }
            current[i] = val;
            rec(slots, min_suffix, max_suffix, k, i + 1, s, current, out);
        }
    }
    let mut out = Vec::new();
    let mut current = vec![0i64; n];
    if min_suffix[0] <= k && max_suffix[0] >= k {
        rec(&slots, &min_suffix, &max_suffix, k, 0, 0, &mut current, &mut out);
    }
    // expand representative tuples into full class vectors
    out.into_iter()
        .map(|tuple| {
            let mut d = vec![0i64; r];
            for ((j, _, _), val) in slots.iter().zip(tuple) {
                d[*j] = val;
                d[classes.inverse_class[*j]] = val;
            }
            d
        })
        .collect()
}

/// One admissible eigenspace-dimension assignment: for each irreducible χ,
/// `dims[i]` is the θ₁-eigenspace dimension inside the underlying module,
/// so χ(D) = dims[i]·θ₁ + (deg − dims[i])·θ₂.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiAssignment {
    pub dims: Vec<i64>,
    /// χ(D) per character row
    pub chi_values: Vec<i64>,
    /// per-class intersection counts induced by the assignment
    pub class_values: Vec<i64>,
}

/// Keeps a vector iff its induced character values are a valid eigenvalue
/// decomposition on every irreducible, the dimension totals match the
/// multiplicity m₁, nonprincipal linear characters land on {θ₁, θ₂}
/// uniformly over H, the coset quotas hold, and the inverse-closure
/// parity is satisfied.
pub fn filter_vectors(
    t: &CharacterTable,
    params: &SrgParams,
    vectors: Vec<Vec<i64>>,
    ctx: Option<&LinearCharContext>,
) -> Vec<(Vec<i64>, PhiAssignment)> {
    let e = params.eigendata().expect("verified upstream");
    let SqrtDelta::Integral(s) = e.sqrt_delta else { unreachable!() };
    let mut out = Vec::new();
    'vectors: for d in vectors {
        if sieves::order2_check(&t.classes.rep_orders, &t.classes.inverse_class, &d).is_err() {
            continue;
        }
        debug_assert_eq!(d.iter().sum::<i64>(), params.k);
        let mut dims = vec![0i64; t.chars.len()];
        let mut chi_values = vec![0i64; t.chars.len()];
        let mut m1_sum = 0i64;
        let mut h_theta: Option<i64> = None;
        for (i, row) in t.chars.iter().enumerate() {
            let terms: Vec<Cyclotomic> = row
                .iter()
                .zip(&d)
                .filter(|(_, &dj)| dj != 0)
                .map(|(v, &dj)| v.scale_int(dj))
                .collect();
            let sum = cyclo_sum(terms.iter());
            let Some(sv) = sum.as_i64() else {
                continue 'vectors; // χ(D) must be a rational integer
            };
            chi_values[i] = sv;
            if i == t.principal_index {
                if sv != params.k {
                    continue 'vectors;
                }
                continue;
            }
            // sv = a·θ₁ + (deg − a)·θ₂ with 0 ≤ a ≤ deg
            let num = sv - t.degrees[i] * e.theta2;
            if num % s != 0 {
                continue 'vectors;
            }
            let a = num / s;
            if a < 0 || a > t.degrees[i] {
                continue 'vectors;
            }
            dims[i] = a;
            m1_sum += t.degrees[i] * a;
            if t.degrees[i] == 1 && sv != e.theta1 && sv != e.theta2 {
                continue 'vectors;
            }
            if let Some(ctx) = ctx {
                if ctx.h_indices.contains(&i) {
                    match h_theta {
                        None => h_theta = Some(sv),
                        Some(prev) if prev != sv => continue 'vectors,
                        _ => {}
                    }
                }
            }
        }
        if m1_sum != e.m1 {
            continue 'vectors;
        }
        if let Some(ctx) = ctx {
            // coset quotas in the branch picked by the linear characters
            let theta_alpha = h_theta.expect("H has a nonprincipal member");
            let quota = sieves::coset_intersections(ctx, params, &e)
                .into_iter()
                .flatten()
                .find(|q| q.theta_alpha == theta_alpha);
            let Some(q) = quota else { continue 'vectors };
            let mut per_coset = vec![0i64; ctx.num_cosets];
            for j in 0..t.num_classes() {
                per_coset[ctx.coset_of_class[j]] += d[j];
            }
            if per_coset[0] != q.n_cap_d {
                continue 'vectors;
            }
            if per_coset[1..].iter().any(|&c| c != q.coset_quota) {
                continue 'vectors;
            }
        }
        let assignment = PhiAssignment { dims, chi_values, class_values: d.clone() };
        out.push((d, assignment));
    }
    out
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CciStats {
    pub enumerated: usize,
    pub survivors: usize,
}

#[derive(Debug, Clone)]
pub struct CciReport {
    pub params: SrgParams,
    pub constraints: Vec<ClassConstraint>,
    pub vectors: Vec<(Vec<i64>, PhiAssignment)>,
    pub stats: CciStats,
    pub verdict: SieveVerdict,
}

/// The full pipeline: constraints, enumeration, filtering, verdict.
pub fn class_intersections(t: &CharacterTable, params: &SrgParams) -> CciReport {
    match build_constraints(t, params) {
        Err(verdict) => CciReport {
            params: *params,
            constraints: vec![],
            vectors: vec![],
            stats: CciStats { enumerated: 0, survivors: 0 },
            verdict,
        },
        Ok(constraints) => {
            let enumerated = enumerate_vectors(&constraints, &t.classes, params.k);
            let count = enumerated.len();
            let vectors = filter_vectors(t, params, enumerated, constraints.context.as_ref());
            let verdict = if vectors.is_empty() {
                SieveVerdict::infeasible(Witness::PhiExhausted {
                    params: *params,
                    stages: vec![count as u64, 0],
                })
            } else {
                SieveVerdict::unresolved(Witness::Inapplicable {
                    rule: "class-intersections".into(),
                    reason: format!("{} admissible vector(s) survive", vectors.len()),
                })
            };
            CciReport {
                params: *params,
                constraints: constraints.per_class,
                stats: CciStats { enumerated: count, survivors: vectors.len() },
                vectors,
                verdict,
            }
        }
    }
}

/// Renders survivors in the vector output format: a header mapping class
/// index to (size, representative order, centralizer order), then one line
/// per surviving vector.
pub fn format_vectors(t: &CharacterTable, report: &CciReport) -> String {
    let mut out = String::new();
    out.push_str("# class: size rep_order centralizer\n");
    for j in 0..t.num_classes() {
        out.push_str(&format!(
            "# {}: {} {} {}\n",
            j, t.classes.sizes[j], t.classes.rep_orders[j], t.classes.centralizer_orders[j]
        ));
    }
    for (d, _) in &report.vectors {
        let row: Vec<String> = d.iter().map(i64::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhiMode {
    RegularPds,
    ReversibleDs,
}

#[derive(Debug, Clone)]
pub struct PhiEnumReport {
    pub params: SrgParams,
    /// stage survivors: linear assignments, after the vanishing-class
    /// prune, full assignments passing the identity constraint, final
    pub stages: Vec<u64>,
    pub survivors: Vec<PhiAssignment>,
    pub verdict: SieveVerdict,
}

/// Staged enumeration over eigenspace-dimension assignments, honoring
/// conjugate pairing throughout.
pub fn phi_enumeration(t: &CharacterTable, params: &SrgParams, mode: PhiMode) -> PhiEnumReport {
    let e = params.eigendata().expect("primitive parameters required");
    let SqrtDelta::Integral(_) = e.sqrt_delta else {
        panic!("phi enumeration needs integral √Δ");
    };
    let r = t.num_classes();
    // conjugation orbits over nonprincipal characters
    let mut seen = vec![false; t.chars.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for i in 0..t.chars.len() {
        if i == t.principal_index || seen[i] {
            continue;
        }
        let j = t.conjugate_char[i];
        seen[i] = true;
        let mut members = vec![i];
        if j != i {
            seen[j] = true;
            members.push(j);
        }
        orbits.push(members);
    }
    let linear_orbits: Vec<usize> = (0..orbits.len())
        .filter(|&o| t.degrees[orbits[o][0]] == 1)
        .collect();
    let nonlinear_orbits: Vec<usize> = (0..orbits.len())
        .filter(|&o| t.degrees[orbits[o][0]] > 1)
        .collect();

    // classes where every nonlinear character vanishes: Φ there is decided
    // by the linear part alone and prunes early
    let linear_determined: Vec<usize> = (1..r)
        .filter(|&j| {
            t.chars
                .iter()
                .enumerate()
                .all(|(i, row)| t.degrees[i] == 1 || row[j].is_zero())
        })
        .collect();
    let residues: Vec<ResidueConstraint> = (0..r)
        .map(|j| sieves::modular_phi(t.classes.centralizer_orders[j], params, &e))
        .collect();

    let stage1 = 1u64 << linear_orbits.len();
    // stage 2: linear sign patterns surviving the vanishing-class prune
    let mut linear_patterns: Vec<Vec<i64>> = Vec::new();
    for mask in 0u64..stage1 {
        let pattern: Vec<i64> = (0..linear_orbits.len())
            .map(|oi| if mask >> oi & 1 == 1 { e.theta1 } else { e.theta2 })
            .collect();
        let ok = linear_determined.iter().all(|&j| {
            let mut phi = Cyclotomic::from_integer(params.k);
            for (oi, &o) in linear_orbits.iter().enumerate() {
                for &i in &orbits[o] {
                    phi = phi.add(&t.chars[i][j].scale_int(pattern[oi]));
                }
            }
            let Some(val) = phi.as_i64() else { return false };
            let c = t.classes.centralizer_orders[j] as i64;
            if val < 0 || val % c != 0 {
                return false;
            }
            let dj = val / c;
            dj <= t.classes.sizes[j] as i64 && residues[j].allows(dj)
        });
        if ok {
            linear_patterns.push(pattern);
        }
    }
    let stage2 = linear_patterns.len() as u64;

    // stage 3: extend over nonlinear orbits; keep assignments whose
    // identity value is admissible
    let identity_targets: Vec<i64> = match mode {
        PhiMode::RegularPds => vec![0],
        PhiMode::ReversibleDs => vec![0, params.v],
    };
    let nl_count = nonlinear_orbits.len();
    let mut stage3_assignments: Vec<(usize, Vec<i64>)> = Vec::new();
    for (pi, lp) in linear_patterns.iter().enumerate() {
        let lin_phi1: i64 = params.k
            + linear_orbits
                .iter()
                .enumerate()
                .map(|(oi, &o)| lp[oi] * orbits[o].len() as i64)
                .sum::<i64>();
        let mut dims = vec![0i64; nl_count];
        loop {
            let nl_phi1: i64 = nonlinear_orbits
                .iter()
                .enumerate()
                .map(|(oi, &o)| {
                    let deg = t.degrees[orbits[o][0]];
                    let sv = dims[oi] * e.theta1 + (deg - dims[oi]) * e.theta2;
                    sv * deg * orbits[o].len() as i64
                })
                .sum();
            if identity_targets.contains(&(lin_phi1 + nl_phi1)) {
                stage3_assignments.push((pi, dims.clone()));
            }
            // odometer over [0, deg] per orbit
            let mut idx = 0;
            while idx < nl_count {
                let deg = t.degrees[orbits[nonlinear_orbits[idx]][0]];
                if dims[idx] < deg {
                    dims[idx] += 1;
                    break;
                }
                dims[idx] = 0;
                idx += 1;
            }
            if idx == nl_count {
                break;
            }
        }
    }
    let stage3 = stage3_assignments.len() as u64;

    // stage 4: full per-class validity
    let mut survivors = Vec::new();
    'assignments: for (pi, nl_dims) in &stage3_assignments {
        let lp = &linear_patterns[*pi];
        let mut chi_values = vec![0i64; t.chars.len()];
        let mut all_dims = vec![0i64; t.chars.len()];
        chi_values[t.principal_index] = params.k;
        for (oi, &o) in linear_orbits.iter().enumerate() {
            for &i in &orbits[o] {
                chi_values[i] = lp[oi];
                all_dims[i] = i64::from(lp[oi] == e.theta1);
            }
        }
        for (oi, &o) in nonlinear_orbits.iter().enumerate() {
            let deg = t.degrees[orbits[o][0]];
            for &i in &orbits[o] {
                chi_values[i] = nl_dims[oi] * e.theta1 + (deg - nl_dims[oi]) * e.theta2;
                all_dims[i] = nl_dims[oi];
            }
        }
        let m1_sum: i64 = (0..t.chars.len())
            .filter(|&i| i != t.principal_index)
            .map(|i| t.degrees[i] * all_dims[i])
            .sum();
        if m1_sum != e.m1 {
            continue 'assignments;
        }
        let mut class_values = vec![0i64; r];
        for j in 0..r {
            let terms: Vec<Cyclotomic> = (0..t.chars.len())
                .filter(|&i| chi_values[i] != 0)
                .map(|i| t.chars[i][j].scale_int(chi_values[i]))
                .collect();
            let phi = cyclo_sum(terms.iter());
            let Some(val) = phi.as_i64() else { continue 'assignments };
            let c = t.classes.centralizer_orders[j] as i64;
            if val < 0 || val % c != 0 {
                continue 'assignments;
            }
            let dj = val / c;
            if dj > t.classes.sizes[j] as i64 {
                continue 'assignments;
            }
            if j == 0 {
                let identity_ok = match mode {
                    PhiMode::RegularPds => dj == 0,
                    PhiMode::ReversibleDs => dj == 0 || dj == 1,
                };
                if !identity_ok {
                    continue 'assignments;
                }
            } else if !residues[j].allows(dj) {
                continue 'assignments;
            }
            class_values[j] = dj;
        }
        if sieves::order2_check(&t.classes.rep_orders, &t.classes.inverse_class, &class_values)
            .is_err()
        {
            continue 'assignments;
        }
        // Σ_j d_j equals the principal coefficient k whenever every class
        // divided cleanly; kept as a guard on the arithmetic
        if class_values.iter().sum::<i64>() != params.k {
            continue 'assignments;
        }
        survivors.push(PhiAssignment { dims: all_dims, chi_values, class_values });
    }
    let stage4 = survivors.len() as u64;
    let stages = vec![stage1, stage2, stage3, stage4];
    let verdict = if survivors.is_empty() {
        SieveVerdict::infeasible(Witness::PhiExhausted { params: *params, stages: stages.clone() })
    } else {
        SieveVerdict::unresolved(Witness::Inapplicable {
            rule: "phi-enumeration".into(),
            reason: format!("{} assignment(s) survive", survivors.len()),
        })
    };
    PhiEnumReport { params: *params, stages, survivors, verdict }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::compute_table;
    use crate::group::{ConjugacyData, GroupSpec};
    use crate::sieves::Status;

    fn report_for(q: u64, m: u64, tt: u64, params: SrgParams) -> (CharacterTable, CciReport) {
        let g = GroupSpec::Metacyclic { q, m, t: tt }.build().unwrap();
        let cd = ConjugacyData::compute(&g);
        let t = compute_table(&g, &cd).unwrap();
        let rep = class_intersections(&t, &params);
        (t, rep)
    }

    #[test]
    fn order_183_has_exactly_one_vector() {
        let (t, rep) = report_for(61, 3, 13, SrgParams::new(183, 112, 66, 72));
        assert_eq!(rep.vectors.len(), 1);
        let d = &rep.vectors[0].0;
        // multiset {0¹, 2²⁰, 36²}
        let mut sorted = d.clone();
        sorted.sort_unstable();
        let mut expected = vec![0i64];
        expected.extend(std::iter::repeat(2).take(20));
        expected.extend(std::iter::repeat(36).take(2));
        assert_eq!(sorted, expected);
        for j in 0..t.num_classes() {
            match t.classes.sizes[j] {
                1 => assert_eq!(d[j], 0),
                3 => assert_eq!(d[j], 2),
                61 => assert_eq!(d[j], 36),
                _ => unreachable!(),
            }
        }
        assert_eq!(rep.verdict.status, Status::Unresolved);
    }

    #[test]
    fn order_111_includes_the_known_candidate_vector() {
        let (t, rep) = report_for(37, 3, 10, SrgParams::new(111, 30, 5, 9));
        assert!(!rep.vectors.is_empty());
        let expected: Vec<i64> = (0..t.num_classes())
            .map(|j| match t.classes.sizes[j] {
                1 => 0,
                3 => 1,
                37 => 9,
                _ => unreachable!(),
            })
            .collect();
        assert!(
            rep.vectors.iter().any(|(d, _)| *d == expected),
            "missing the expected candidate: got {:?}",
            rep.vectors.iter().map(|(d, _)| d).collect::<Vec<_>>()
        );
    }

    #[test]
    fn order_100_dies_on_the_parity_argument() {
        let (_, rep) = report_for(25, 4, 7, SrgParams::new(100, 33, 14, 9));
        assert_eq!(rep.verdict.status, Status::Infeasible);
        assert_eq!(rep.vectors.len(), 0);
    }

    #[test]
    fn order_57_vector_is_unique_and_matches_coset_quotas() {
        let (t, rep) = report_for(19, 3, 7, SrgParams::new(57, 24, 11, 9));
        assert_eq!(rep.vectors.len(), 1);
        let d = &rep.vectors[0].0;
        for j in 0..t.num_classes() {
            match t.classes.sizes[j] {
                1 => assert_eq!(d[j], 0),
                3 => assert_eq!(d[j], 1),
                19 => assert_eq!(d[j], 9),
                _ => unreachable!(),
            }
        }
        // Σ within the derived subgroup = 6
        let ctx = sieves::linear_context(&t, 8).unwrap();
        let in_n_sum: i64 = (0..t.num_classes()).filter(|&j| ctx.in_n[j]).map(|j| d[j]).sum();
        assert_eq!(in_n_sum, 6);
    }

    #[test]
    fn phi_enumeration_agrees_with_vector_enumeration() {
        // cross-enumeration equivalence on the order-57 case
        let g = GroupSpec::Metacyclic { q: 19, m: 3, t: 7 }.build().unwrap();
        let cd = ConjugacyData::compute(&g);
        let t = compute_table(&g, &cd).unwrap();
        let params = SrgParams::new(57, 24, 11, 9);
        let rep = class_intersections(&t, &params);
        let phi = phi_enumeration(&t, &params, PhiMode::RegularPds);
        let mut from_vectors: Vec<Vec<i64>> =
            rep.vectors.iter().map(|(d, _)| d.clone()).collect();
        let mut from_phi: Vec<Vec<i64>> =
            phi.survivors.iter().map(|a| a.class_values.clone()).collect();
        from_vectors.sort();
        from_vectors.dedup();
        from_phi.sort();
        from_phi.dedup();
        assert_eq!(from_vectors, from_phi);
    }

    #[test]
    fn dual_consistency_of_survivors() {
        // Σ_χ χ(D)·χ(h_j) = |C_G(h_j)|·d_j for every survivor
        let (t, rep) = report_for(61, 3, 13, SrgParams::new(183, 112, 66, 72));
        for (d, a) in &rep.vectors {
            for j in 0..t.num_classes() {
                let terms: Vec<Cyclotomic> = (0..t.chars.len())
                    .map(|i| t.chars[i][j].scale_int(a.chi_values[i]))
                    .collect();
                let phi = cyclo_sum(terms.iter());
                assert_eq!(
                    phi.as_i64(),
                    Some(t.classes.centralizer_orders[j] as i64 * d[j])
                );
            }
        }
    }
}
