//! Exact complex irreducible character tables.
//!
//! `compute_table` follows the classical modular route: class
//! multiplication coefficients, simultaneous diagonalization of the class
//! matrices over F_ℓ for a prime ℓ ≡ 1 (mod exponent), exact degree
//! recovery, and lifting of each value to a cyclotomic integer through the
//! eigenvalue multiplicities of the power map. Both orthogonality
//! relations are verified exactly before a table is returned, and the same
//! verification gates ingested tables.

mod dixon;

pub use dixon::splitting_prime;

use num::bigint::BigInt;
use num::rational::BigRational;
use thiserror::Error;

use crate::arith::{inv_mod, lcm, pow_mod};
use crate::cyclotomic::{cyclo_sum, Cyclotomic};
use crate::group::{Abelianization, ConjugacyData, FiniteGroup};

#[derive(Debug, Error)]
pub enum TableError {
    #[error("row orthogonality fails for characters {a} and {b}")]
    RowOrthogonality { a: usize, b: usize },
    #[error("column orthogonality fails for classes {a} and {b}")]
    ColumnOrthogonality { a: usize, b: usize },
    #[error("sum of squared degrees is {got}, expected the group order {expected}")]
    DegreeSum { got: i64, expected: i64 },
    #[error("character {chi} is not conjugate-paired with any row")]
    MissingConjugate { chi: usize },
    #[error("class data inconsistent: {0}")]
    ClassData(String),
    #[error("malformed character table file: {0}")]
    Format(String),
    #[error("character degree at class 0 is not a positive integer (row {0})")]
    BadDegree(usize),
}

/// Class-level data carried by every table, including ingested tables with
/// no underlying group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassInfo {
    pub sizes: Vec<usize>,
    pub centralizer_orders: Vec<usize>,
    pub rep_orders: Vec<usize>,
    pub inverse_class: Vec<usize>,
}

impl ClassInfo {
    pub fn from_conjugacy(cd: &ConjugacyData) -> ClassInfo {
        ClassInfo {
            sizes: cd.sizes.clone(),
            centralizer_orders: cd.centralizer_orders.clone(),
            rep_orders: cd.rep_orders.clone(),
            inverse_class: cd.inverse_class.iter().map(|&x| x as usize).collect(),
        }
    }

    pub fn num_classes(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_real(&self, j: usize) -> bool {
        self.inverse_class[j] == j
    }
}

#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub order: usize,
    pub exponent: u64,
    pub classes: ClassInfo,
    /// chars[i][j] = χ_i(h_j), exact
    pub chars: Vec<Vec<Cyclotomic>>,
    pub degrees: Vec<i64>,
    /// row index of the complex conjugate of each character
    pub conjugate_char: Vec<usize>,
    pub linear_indices: Vec<usize>,
    /// multiplicative order of each linear character, aligned with
    /// `linear_indices`
    pub linear_orders: Vec<u64>,
    pub principal_index: usize,
}

impl CharacterTable {
    pub fn num_classes(&self) -> usize {
        self.classes.num_classes()
    }

    pub fn num_linear(&self) -> usize {
        self.linear_indices.len()
    }

    /// Classes on which a character takes its degree (the kernel).
    pub fn kernel_classes(&self, chi: usize) -> Vec<bool> {
        let deg = Cyclotomic::from_integer(self.degrees[chi]);
        self.chars[chi].iter().map(|v| *v == deg).collect()
    }

    /// Σ_i coeffs[i]·χ_i(h_j) for every class j.
    pub fn class_function(&self, coeffs: &[Cyclotomic]) -> Vec<Cyclotomic> {
        assert_eq!(coeffs.len(), self.chars.len());
        (0..self.num_classes())
            .map(|j| {
                let terms: Vec<Cyclotomic> = self
                    .chars
                    .iter()
                    .zip(coeffs)
                    .map(|(row, c)| c.mul(&row[j]))
                    .collect();
                cyclo_sum(terms.iter())
            })
            .collect()
    }

    /// Exact verification of both orthogonality relations, the degree sum,
    /// and the conjugate/inverse-class consistency.
    pub fn verify(&self) -> Result<(), TableError> {
        let r = self.num_classes();
        let v = self.order as i64;
        let info = &self.classes;
        if info.sizes.iter().sum::<usize>() != self.order {
            return Err(TableError::ClassData("class sizes do not sum to the order".into()));
        }
        for j in 0..r {
            if info.sizes[j] * info.centralizer_orders[j] != self.order {
                return Err(TableError::ClassData(format!(
                    "size·centralizer ≠ order at class {j}"
                )));
            }
            let ji = info.inverse_class[j];
            if ji >= r || info.inverse_class[ji] != j || info.sizes[ji] != info.sizes[j] {
                return Err(TableError::ClassData(format!(
                    "inverse-class pairing broken at class {j}"
                )));
            }
        }
        let degree_sum: i64 = self.degrees.iter().map(|d| d * d).sum();
        if degree_sum != v {
            return Err(TableError::DegreeSum { got: degree_sum, expected: v });
        }
        // χ(h⁻¹) = conj(χ(h))
        for (i, row) in self.chars.iter().enumerate() {
            for j in 0..r {
                if row[info.inverse_class[j]] != row[j].conj() {
                    return Err(TableError::MissingConjugate { chi: i });
                }
            }
        }
        // row orthogonality: Σ_j |C_j|·χ_a(h_j)·conj(χ_b(h_j)) = |G|·δ_ab
        for a in 0..r {
            for b in a..r {
                let terms: Vec<Cyclotomic> = (0..r)
                    .map(|j| {
                        self.chars[a][j]
                            .mul(&self.chars[b][j].conj())
                            .scale_int(info.sizes[j] as i64)
                    })
                    .collect();
                let s = cyclo_sum(terms.iter());
                let expected = if a == b { v } else { 0 };
                if s != Cyclotomic::from_integer(expected) {
                    return Err(TableError::RowOrthogonality { a, b });
                }
            }
        }
        // column orthogonality: Σ_i χ_i(h_a)·conj(χ_i(h_b)) = δ_ab·|C_G(h_a)|
        for a in 0..r {
            for b in a..r {
                let terms: Vec<Cyclotomic> = self
                    .chars
                    .iter()
                    .map(|row| row[a].mul(&row[b].conj()))
                    .collect();
                let s = cyclo_sum(terms.iter());
                let expected = if a == b { info.centralizer_orders[a] as i64 } else { 0 };
                if s != Cyclotomic::from_integer(expected) {
                    return Err(TableError::ColumnOrthogonality { a, b });
                }
            }
        }
        Ok(())
    }
}

/// Degree-1 characters of G, read off the abelianization. Returned rows
/// are constant on cosets of the derived subgroup.
#[derive(Debug, Clone)]
pub struct LinearCharacters {
    /// values[i][j] = ξ_i(h_j) on class representatives
    pub values: Vec<Vec<Cyclotomic>>,
    pub orders: Vec<u64>,
}

pub fn linear_characters(
    ab: &Abelianization,
    cd: &ConjugacyData,
) -> LinearCharacters {
    let factors = &ab.invariant_factors;
    let m = factors.iter().fold(1u64, |acc, &d| lcm(acc, d));
    let mut tuples: Vec<Vec<u64>> = vec![vec![]];
    for &d in factors {
        let mut next = Vec::with_capacity(tuples.len() * d as usize);
        for t in &tuples {
            for c in 0..d {
                let mut t = t.clone();
                t.push(c);
                next.push(t);
            }
        }
        tuples = next;
    }
    let mut values = Vec::with_capacity(tuples.len());
    let mut orders = Vec::with_capacity(tuples.len());
    for tuple in &tuples {
        let row: Vec<Cyclotomic> = cd
            .reps
            .iter()
            .map(|&rep| {
                let coords = &ab.projection[rep as usize];
                let mut e = 0u64;
                for ((&c, &t), &d) in tuple.iter().zip(coords).zip(factors) {
                    e = (e + c * t % d * (m / d)) % m;
                }
                Cyclotomic::root_of_unity(m.max(1), e)
            })
            .collect();
        let order = tuple
            .iter()
            .zip(factors)
            .fold(1u64, |acc, (&c, &d)| lcm(acc, d / crate::arith::gcd(c, d)));
        values.push(row);
        orders.push(order);
    }
    LinearCharacters { values, orders }
}

/// Full exact table by modular diagonalization and lifting.
pub fn compute_table(g: &FiniteGroup, cd: &ConjugacyData) -> Result<CharacterTable, TableError> {
    let r = cd.num_classes;
    let v = g.order();
    let exponent = g.exponent();
    let l = splitting_prime(exponent, v);
    let omegas = dixon::central_characters(g, cd, l);

    // degrees: |G|/χ(1)² = Σ_k ω_k·ω_{k*}/|C_k| (mod ℓ), χ(1) < ℓ/2
    let max_degree = (v as f64).sqrt() as u64 + 1;
    let mut rows = Vec::with_capacity(r);
    for om in &omegas {
        let mut s: u128 = 0;
        for k in 0..r {
            let ks = cd.inverse_class[k] as usize;
            let inv_c = inv_mod(cd.centralizer_orders[k] as u64 % l, l).unwrap() as u128;
            // ω uses class sizes: |C_k| here is the class size
            let _ = inv_c;
            let inv_size = inv_mod(cd.sizes[k] as u64 % l, l).unwrap() as u128;
            s = (s + om[k] as u128 * om[ks] as u128 % l as u128 * inv_size) % l as u128;
        }
        let s = s as u64;
        let s_inv = inv_mod(s, l).ok_or_else(|| {
            TableError::ClassData("degeneracy: zero norm for a central character".into())
        })?;
        let deg_sq = (v as u128 % l as u128) * s_inv as u128 % l as u128;
        let deg = (1..=max_degree)
            .find(|d| (d * d) % l == deg_sq as u64)
            .ok_or_else(|| TableError::ClassData("no integral degree matches".into()))?;
        rows.push((om.clone(), deg as i64));
    }

    // lifting: fix ζ_exp ↦ z, a primitive exponent-th root of unity mod ℓ
    let w = dixon::primitive_root(l);
    let z = pow_mod(w, (l - 1) / exponent, l);
    let mut chars: Vec<Vec<Cyclotomic>> = Vec::with_capacity(r);
    let mut degrees = Vec::with_capacity(r);
    for (om, deg) in &rows {
        let mut row = Vec::with_capacity(r);
        for j in 0..r {
            row.push(lift_value(cd, om, *deg, j, l, z, exponent)?);
        }
        chars.push(row);
        degrees.push(*deg);
    }

    // canonical row order: by degree, then by the value tuple
    let mut order_idx: Vec<usize> = (0..r).collect();
    order_idx.sort_by(|&a, &b| {
        degrees[a].cmp(&degrees[b]).then_with(|| {
            for j in 0..r {
                match chars[a][j].cmp_canonical(&chars[b][j]) {
                    std::cmp::Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            std::cmp::Ordering::Equal
        })
    });
    let chars: Vec<Vec<Cyclotomic>> = order_idx.iter().map(|&i| chars[i].clone()).collect();
    let degrees: Vec<i64> = order_idx.iter().map(|&i| degrees[i]).collect();

    let table = assemble(
        v,
        exponent,
        ClassInfo::from_conjugacy(cd),
        chars,
        degrees,
    )?;
    table.verify()?;
    Ok(table)
}

/// χ(g_j) as an exact cyclotomic: the eigenvalues of a representing matrix
/// at g_j are m-th roots of unity; their multiplicities are recovered from
/// the modular character on the power classes of g_j.
fn lift_value(
    cd: &ConjugacyData,
    om: &[u64],
    deg: i64,
    j: usize,
    l: u64,
    z: u64,
    exponent: u64,
) -> Result<Cyclotomic, TableError> {
    let m = cd.rep_orders[j] as u64;
    let zm = pow_mod(z, exponent / m, l);
    let minv = inv_mod(m % l, l).unwrap();
    // modular χ on the power classes
    let chi_bar = |class: usize| -> u64 {
        let inv_c = inv_mod(cd.sizes[class] as u64 % l, l).unwrap();
        (om[class] as u128 * (deg as u64 % l) as u128 % l as u128 * inv_c as u128 % l as u128)
            as u64
    };
    let mut value = Cyclotomic::zero();
    for s in 0..m {
        let mut acc: u128 = 0;
        for t in 0..m {
            let class_t = cd.power_class[j][t as usize] as usize;
            let e = (m - (s * t) % m) % m;
            acc = (acc + chi_bar(class_t) as u128 * pow_mod(zm, e, l) as u128) % l as u128;
        }
        let c = (acc * minv as u128 % l as u128) as u64;
        if c == 0 {
            continue;
        }
        if c > deg as u64 {
            return Err(TableError::ClassData(format!(
                "lifted multiplicity {c} exceeds the degree {deg} at class {j}"
            )));
        }
        value = value.add(&Cyclotomic::root_of_unity(m, s).scale_int(c as i64));
    }
    Ok(value)
}

/// Builds the derived fields and sanity-checks degree data.
fn assemble(
    order: usize,
    exponent: u64,
    classes: ClassInfo,
    chars: Vec<Vec<Cyclotomic>>,
    degrees: Vec<i64>,
) -> Result<CharacterTable, TableError> {
    let r = classes.num_classes();
    let mut conjugate_char = vec![usize::MAX; r];
    for i in 0..r {
        let conj_row: Vec<Cyclotomic> = chars[i].iter().map(Cyclotomic::conj).collect();
        let Some(j) = chars.iter().position(|row| *row == conj_row) else {
            return Err(TableError::MissingConjugate { chi: i });
        };
        conjugate_char[i] = j;
    }
    let mut linear_indices = Vec::new();
    let mut linear_orders = Vec::new();
    let mut principal_index = usize::MAX;
    let one = Cyclotomic::one();
    for (i, row) in chars.iter().enumerate() {
        if degrees[i] == 1 {
            linear_indices.push(i);
            let mut ord = 1u64;
            for val in row {
                let o = val.root_of_unity_order(exponent).ok_or_else(|| {
                    TableError::ClassData(format!("linear character {i} has a non-root value"))
                })?;
                ord = lcm(ord, o);
            }
            linear_orders.push(ord);
            if row.iter().all(|v| *v == one) {
                principal_index = i;
            }
        }
    }
    if principal_index == usize::MAX {
        return Err(TableError::ClassData("no principal character row".into()));
    }
    Ok(CharacterTable {
        order,
        exponent,
        classes,
        chars,
        degrees,
        conjugate_char,
        linear_indices,
        linear_orders,
        principal_index,
    })
}

/// Character table text format.
///
/// ```text
/// order r exponent
/// r lines: size centralizer_order rep_order inverse_class_index
/// r lines: r cyclotomic values
/// ```
pub fn export_chartab(t: &CharacterTable) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {} {}\n", t.order, t.num_classes(), t.exponent));
    for j in 0..t.num_classes() {
        out.push_str(&format!(
            "{} {} {} {}\n",
            t.classes.sizes[j],
            t.classes.centralizer_orders[j],
            t.classes.rep_orders[j],
            t.classes.inverse_class[j]
        ));
    }
    for row in &t.chars {
        let vals: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&vals.join(" "));
        out.push('\n');
    }
    out
}

pub fn ingest_chartab(text: &str) -> Result<CharacterTable, TableError> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| TableError::Format("empty file".into()))?;
    let head: Vec<u64> = header
        .split_whitespace()
        .map(|x| x.parse().map_err(|_| TableError::Format("bad header".into())))
        .collect::<Result<_, _>>()?;
    if head.len() != 3 {
        return Err(TableError::Format("header must be `order r exponent`".into()));
    }
    let (order, r, exponent) = (head[0] as usize, head[1] as usize, head[2]);
    let mut sizes = Vec::with_capacity(r);
    let mut centralizer_orders = Vec::with_capacity(r);
    let mut rep_orders = Vec::with_capacity(r);
    let mut inverse_class = Vec::with_capacity(r);
    for j in 0..r {
        let line = lines
            .next()
            .ok_or_else(|| TableError::Format(format!("missing class line {j}")))?;
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|x| x.parse().map_err(|_| TableError::Format(format!("bad class line {j}"))))
            .collect::<Result<_, _>>()?;
        if nums.len() != 4 {
            return Err(TableError::Format(format!("class line {j} needs 4 fields")));
        }
        sizes.push(nums[0]);
        centralizer_orders.push(nums[1]);
        rep_orders.push(nums[2]);
        inverse_class.push(nums[3]);
    }
    if sizes.first() != Some(&1) || rep_orders.first() != Some(&1) {
        return Err(TableError::ClassData("class 0 must be the identity class".into()));
    }
    let mut chars = Vec::with_capacity(r);
    let mut degrees = Vec::with_capacity(r);
    for i in 0..r {
        let line = lines
            .next()
            .ok_or_else(|| TableError::Format(format!("missing character row {i}")))?;
        let row: Vec<Cyclotomic> = line
            .split_whitespace()
            .map(|x| x.parse().map_err(|_| TableError::Format(format!("bad value in row {i}"))))
            .collect::<Result<_, _>>()?;
        if row.len() != r {
            return Err(TableError::Format(format!("row {i} needs {r} values")));
        }
        let deg = row[0]
            .as_i64()
            .filter(|&d| d > 0)
            .ok_or(TableError::BadDegree(i))?;
        degrees.push(deg);
        chars.push(row);
    }
    let classes = ClassInfo { sizes, centralizer_orders, rep_orders, inverse_class };
    let table = assemble(order, exponent, classes, chars, degrees)?;
    table.verify()?;
    Ok(table)
}

/// The regular-representation idempotent oracle: rebuilds each character
/// from the central idempotent e_χ = (χ(1)/|G|)·Σ_g conj(χ(g))·g by trace
/// projection, entirely within exact arithmetic. Used by tests to confirm
/// `compute_table` against an independent route.
pub fn idempotent_projection_oracle(
    g: &FiniteGroup,
    cd: &ConjugacyData,
    t: &CharacterTable,
) -> Result<(), TableError> {
    let v = g.order();
    let vr = BigRational::from_integer(BigInt::from(v as i64));
    for (i, row) in t.chars.iter().enumerate() {
        let deg = BigRational::from_integer(BigInt::from(t.degrees[i]));
        let scale = deg / vr.clone();
        // coefficient of each group element x in e_χ: (χ(1)/|G|)·conj(χ(x))
        let coeff: Vec<Cyclotomic> = (0..v)
            .map(|x| {
                let class = cd.class_of[x] as usize;
                row[class].conj().scale(&scale)
            })
            .collect();
        // idempotency: e² = e, checked coefficient by coefficient
        let mut square = vec![Cyclotomic::zero(); v];
        for x in 0..v {
            if coeff[x].is_zero() {
                continue;
            }
            for y in 0..v {
                if coeff[y].is_zero() {
                    continue;
                }
                let xy = g.mul(x, y);
                square[xy] = square[xy].add(&coeff[x].mul(&coeff[y]));
            }
        }
        if square != coeff {
            return Err(TableError::ClassData(format!(
                "idempotent square mismatch for character {i}"
            )));
        }
        // dimension: trace of right multiplication by e equals v·e[1] = χ(1)²
        let dim = coeff[0].scale_int(v as i64);
        if dim.as_i64() != Some(t.degrees[i] * t.degrees[i]) {
            return Err(TableError::ClassData(format!(
                "isotypic dimension mismatch for character {i}"
            )));
        }
        // χ(g)·χ(1) = trace(x ↦ g·x·e) = Σ_x e[x⁻¹ g⁻¹ x]
        for (j, &rep) in cd.reps.iter().enumerate() {
            let ginv = g.inv(rep as usize);
            let mut tr = Cyclotomic::zero();
            for x in 0..v {
                tr = tr.add(&coeff[g.conjugate(ginv, x)]);
            }
            if tr != row[j].scale_int(t.degrees[i]) {
                return Err(TableError::ClassData(format!(
                    "trace projection mismatch at character {i}, class {j}"
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{GroupSpec, NormalStructure};

    fn table_for(spec: GroupSpec) -> (FiniteGroup, ConjugacyData, CharacterTable) {
        let g = spec.build().unwrap();
        let cd = ConjugacyData::compute(&g);
        let t = compute_table(&g, &cd).unwrap();
        (g, cd, t)
    }

    #[test]
    fn cyclic_table_is_the_root_of_unity_matrix() {
        let (_, _, t) = table_for(GroupSpec::Cyclic(6));
        assert_eq!(t.num_classes(), 6);
        assert!(t.degrees.iter().all(|&d| d == 1));
        assert_eq!(t.num_linear(), 6);
        // rows are exactly the maps x ↦ ζ_6^{jk} up to ordering
        let mut seen = std::collections::BTreeSet::new();
        for row in &t.chars {
            let gen_val = row
                .iter()
                .find(|v| v.root_of_unity_order(6) == Some(6))
                .map(|_| true)
                .unwrap_or(false);
            let _ = gen_val;
            for v in row {
                assert!(v.root_of_unity_order(6).is_some());
            }
            seen.insert(format!("{:?}", row.iter().map(|v| v.to_string()).collect::<Vec<_>>()));
        }
        assert_eq!(seen.len(), 6);
    }

    #[test]
    fn frobenius_57_degrees() {
        let (_, _, t) = table_for(GroupSpec::Metacyclic { q: 19, m: 3, t: 7 });
        let mut degs = t.degrees.clone();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 1, 3, 3, 3, 3, 3, 3]);
        assert_eq!(t.num_linear(), 3);
        let mut orders = t.linear_orders.clone();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 3, 3]);
    }

    #[test]
    fn order_183_nonlinear_characters_vanish_on_large_classes() {
        let (_, cd, t) = table_for(GroupSpec::Metacyclic { q: 61, m: 3, t: 13 });
        let mut degs = t.degrees.clone();
        degs.sort_unstable();
        let mut expected = vec![1, 1, 1];
        expected.extend(std::iter::repeat(3).take(20));
        assert_eq!(degs, expected);
        for j in 0..t.num_classes() {
            if cd.sizes[j] == 61 {
                for (i, row) in t.chars.iter().enumerate() {
                    if t.degrees[i] > 1 {
                        assert!(row[j].is_zero(), "nonlinear char {i} at class {j}");
                    }
                }
            }
        }
    }

    #[test]
    fn linear_characters_standalone_match_the_table() {
        for spec in [
            GroupSpec::Metacyclic { q: 19, m: 3, t: 7 },
            GroupSpec::Metacyclic { q: 37, m: 3, t: 10 },
            GroupSpec::Cyclic(4),
        ] {
            let g = spec.build().unwrap();
            let cd = ConjugacyData::compute(&g);
            let ns = NormalStructure::compute(&g);
            let lc = linear_characters(&ns.abelianization, &cd);
            let t = compute_table(&g, &cd).unwrap();
            assert_eq!(lc.values.len(), t.num_linear());
            // every standalone row appears in the table
            for row in &lc.values {
                assert!(
                    t.chars.iter().any(|trow| trow == row),
                    "missing linear row in table for {}",
                    g.label()
                );
            }
            let mut a = lc.orders.clone();
            a.sort_unstable();
            let mut b = t.linear_orders.clone();
            b.sort_unstable();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn metacyclic_37_linear_orders() {
        let (_, _, t) = table_for(GroupSpec::Metacyclic { q: 37, m: 3, t: 10 });
        let mut orders = t.linear_orders.clone();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 3, 3]);
    }

    #[test]
    fn table_export_round_trips() {
        let (_, _, t) = table_for(GroupSpec::Dihedral(4));
        let text = export_chartab(&t);
        let u = ingest_chartab(&text).unwrap();
        assert_eq!(t.degrees, u.degrees);
        assert_eq!(t.chars, u.chars);
        assert_eq!(t.classes, u.classes);
    }

    #[test]
    fn hand_built_s3_table_is_accepted() {
        let text = "\
6 3 6
1 6 1 0
3 2 2 1
2 3 3 2
1:[0=1] 1:[0=1] 1:[0=1]
1:[0=1] 1:[0=-1] 1:[0=1]
1:[0=2] 1:[] 1:[0=-1]
";
        let t = ingest_chartab(text).unwrap();
        assert_eq!(t.degrees, vec![1, 1, 2]);
        assert_eq!(t.num_linear(), 2);
    }

    #[test]
    fn corrupted_table_is_rejected_with_the_failing_pair() {
        // flip one sign in the S3 table: row orthogonality must name it
        let text = "\
6 3 6
1 6 1 0
3 2 2 1
2 3 3 2
1:[0=1] 1:[0=1] 1:[0=1]
1:[0=1] 1:[0=1] 1:[0=1]
1:[0=2] 1:[] 1:[0=-1]
";
        match ingest_chartab(text) {
            Err(TableError::RowOrthogonality { a, b }) => assert!(a <= b),
            other => panic!("expected row orthogonality failure, got {other:?}"),
        }
    }

    #[test]
    fn class_function_from_degrees_is_the_regular_character() {
        let (_, _, t) = table_for(GroupSpec::Dihedral(5));
        let coeffs: Vec<Cyclotomic> = t
            .degrees
            .iter()
            .map(|&d| Cyclotomic::from_integer(d))
            .collect();
        let values = t.class_function(&coeffs);
        assert_eq!(values[0].as_i64(), Some(10));
        for v in &values[1..] {
            assert!(v.is_zero());
        }
        // principal character alone gives the all-ones class function
        let mut coeffs = vec![Cyclotomic::zero(); t.chars.len()];
        coeffs[t.principal_index] = Cyclotomic::one();
        let values = t.class_function(&coeffs);
        assert!(values.iter().all(|v| *v == Cyclotomic::one()));
    }

    #[test]
    fn tables_are_closed_under_the_galois_action() {
        let (_, _, t) = table_for(GroupSpec::Metacyclic { q: 13, m: 4, t: 5 });
        for j in 1..t.exponent {
            if crate::arith::gcd(j, t.exponent) != 1 {
                continue;
            }
            for row in &t.chars {
                let mapped: Vec<Cyclotomic> =
                    row.iter().map(|v| v.galois(j).unwrap()).collect();
                assert!(t.chars.iter().any(|r| *r == mapped));
            }
        }
    }

    #[test]
    fn idempotent_oracle_confirms_small_tables() {
        for spec in [
            GroupSpec::Dihedral(3),
            GroupSpec::Dihedral(4),
            GroupSpec::Cyclic(12),
            GroupSpec::Metacyclic { q: 7, m: 3, t: 2 },
            "elab(2,2,[0,1;1,1])".parse::<GroupSpec>().unwrap(),
            GroupSpec::DirectProduct(vec![GroupSpec::Dihedral(3), GroupSpec::Cyclic(2)]),
        ] {
            let g = spec.build().unwrap();
            assert!(g.order() <= 24);
            let cd = ConjugacyData::compute(&g);
            let t = compute_table(&g, &cd).unwrap();
            idempotent_projection_oracle(&g, &cd, &t).unwrap();
        }
    }
}
