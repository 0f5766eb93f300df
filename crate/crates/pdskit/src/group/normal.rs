//! Derived subgroup, center, solvability and the abelianization map.

use super::FiniteGroup;

#[derive(Debug, Clone)]
pub struct NormalStructure {
    /// membership mask of the derived subgroup [G, G]
    pub derived_members: Vec<bool>,
    pub center_members: Vec<bool>,
    /// sizes of the successive terms of the derived series, starting at |G|
    pub derived_series_lengths: Vec<usize>,
    pub is_solvable: bool,
    pub abelianization: Abelianization,
}

/// Invariant-factor decomposition of G/G' with the projection map.
#[derive(Debug, Clone)]
pub struct Abelianization {
    /// invariant factors d_1 | d_2 | …, all > 1 (empty for perfect groups)
    pub invariant_factors: Vec<u64>,
    /// element -> coordinate tuple modulo the invariant factors
    pub projection: Vec<Vec<u64>>,
}

impl Abelianization {
    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }
}

impl NormalStructure {
    pub fn compute(g: &FiniteGroup) -> NormalStructure {
        let v = g.order();
        let derived_members = derived_subgroup(g, &vec![true; v]);
        let mut center_members = vec![false; v];
        for x in 0..v {
            center_members[x] = (0..v).all(|y| g.mul(x, y) == g.mul(y, x));
        }
        let mut series = vec![v];
        let mut current = derived_members.clone();
        loop {
            let size = current.iter().filter(|&&b| b).count();
            series.push(size);
            if size == 1 {
                break;
            }
            let next = derived_subgroup(g, &current);
            let next_size = next.iter().filter(|&&b| b).count();
            if next_size == size {
                break; // perfect subgroup; series stalls
            }
            current = next;
        }
        let is_solvable = *series.last().unwrap() == 1;
        let abelianization = abelianization(g, &derived_members);
        NormalStructure {
            derived_members,
            center_members,
            derived_series_lengths: series,
            is_solvable,
            abelianization,
        }
    }

    pub fn derived_order(&self) -> usize {
        self.derived_members.iter().filter(|&&b| b).count()
    }
}

/// Subgroup generated by the commutators of elements of `mask`.
fn derived_subgroup(g: &FiniteGroup, mask: &[bool]) -> Vec<bool> {
    let v = g.order();
    let members: Vec<usize> = (0..v).filter(|&x| mask[x]).collect();
    let mut gens = vec![false; v];
    for &a in &members {
        for &b in &members {
            gens[g.commutator(a, b)] = true;
        }
    }
    closure(g, &gens)
}

/// Closure of a generating mask under multiplication.
pub(crate) fn closure(g: &FiniteGroup, gens: &[bool]) -> Vec<bool> {
    let v = g.order();
    let gen_list: Vec<usize> = (0..v).filter(|&x| gens[x]).collect();
    let mut member = vec![false; v];
    member[0] = true;
    let mut stack = vec![0usize];
    while let Some(x) = stack.pop() {
        for &s in &gen_list {
            let y = g.mul(x, s);
            if !member[y] {
                member[y] = true;
                stack.push(y);
            }
        }
    }
    member
}

fn abelianization(g: &FiniteGroup, derived: &[bool]) -> Abelianization {
    let v = g.order();
    // coset decomposition of G' and the abelian quotient on coset ids
    let mut coset_of = vec![usize::MAX; v];
    let mut reps = Vec::new();
    for x in 0..v {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for n in 0..v {
            if derived[n] {
                coset_of[g.mul(n, x)] = id;
            }
        }
    }
    let q = reps.len();
    let qmul = |a: usize, b: usize| coset_of[g.mul(reps[a], reps[b])];
    if q == 1 {
        return Abelianization { invariant_factors: vec![], projection: vec![vec![]; v] };
    }

    // greedy generating set of the quotient
    let mut gens: Vec<usize> = Vec::new();
    let mut generated = vec![false; q];
    generated[0] = true;
    let mut count = 1;
    for c in 1..q {
        if generated[c] {
            continue;
        }
        gens.push(c);
        // close under the new generator (abelian, so products suffice)
        let mut stack: Vec<usize> = (0..q).filter(|&x| generated[x]).collect();
        while let Some(x) = stack.pop() {
            let mut y = qmul(x, c);
            while !generated[y] {
                generated[y] = true;
                count += 1;
                stack.push(y);
                y = qmul(y, c);
            }
        }
        if count == q {
            break;
        }
    }
    let n = gens.len();

    // exponent vectors from a breadth-first scan; edges off the spanning
    // tree become lattice relations
    let mut expvec: Vec<Option<Vec<i128>>> = vec![None; q];
    expvec[0] = Some(vec![0; n]);
    let mut queue = std::collections::VecDeque::from([0usize]);
    let mut relations: Vec<Vec<i128>> = Vec::new();
    while let Some(x) = queue.pop_front() {
        let base = expvec[x].clone().unwrap();
        for (i, &gi) in gens.iter().enumerate() {
            let y = qmul(x, gi);
            let mut next = base.clone();
            next[i] += 1;
            match &expvec[y] {
                None => {
                    expvec[y] = Some(next);
                    queue.push_back(y);
                }
                Some(existing) => {
                    let rel: Vec<i128> =
                        next.iter().zip(existing).map(|(a, b)| a - b).collect();
                    if rel.iter().any(|&x| x != 0) {
                        relations.push(rel);
                    }
                }
            }
        }
    }

    let (diag, col_transform) = smith_normal_form(relations, n);
    // quotient coordinates: w = a · Q, reduced modulo the diagonal
    let keep: Vec<usize> = (0..n).filter(|&i| diag[i] != 1).collect();
    let factors: Vec<u64> = keep.iter().map(|&i| diag[i] as u64).collect();
    let project = |a: &[i128]| -> Vec<u64> {
        keep.iter()
            .map(|&j| {
                let mut w: i128 = (0..n).map(|i| a[i] * col_transform[i][j]).sum();
                w = w.rem_euclid(diag[j]);
                w as u64
            })
            .collect()
    };
    let projection: Vec<Vec<u64>> = (0..v)
        .map(|x| project(expvec[coset_of[x]].as_ref().unwrap()))
        .collect();
    Abelianization { invariant_factors: factors, projection }
}

/// Smith normal form of the lattice spanned by `rows` inside Z^n.
/// Returns the n diagonal entries (the lattice has full rank here, since it
/// contains multiples of every basis vector) and the accumulated column
/// transform Q with lattice·Q diagonal.
fn smith_normal_form(rows: Vec<Vec<i128>>, n: usize) -> (Vec<i128>, Vec<Vec<i128>>) {
    let mut m: Vec<Vec<i128>> = rows;
    if m.is_empty() {
        m.push(vec![0; n]);
    }
    let rows_n = m.len();
    let mut q: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect();
    let mut t = 0usize;
    while t < n && t < rows_n {
        loop {
            // locate a pivot: smallest nonzero magnitude in the submatrix
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows_n {
                for j in t..n {
                    if m[i][j] != 0
                        && pivot.map_or(true, |(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return finish_snf(m, q, t, n);
            };
            m.swap(t, pi);
            if pj != t {
                for row in m.iter_mut() {
                    row.swap(t, pj);
                }
                q.iter_mut().for_each(|row| row.swap(t, pj));
            }
            if m[t][t] < 0 {
                for row in m.iter_mut() {
                    row[t] = -row[t];
                }
                q.iter_mut().for_each(|row| row[t] = -row[t]);
            }
            let p = m[t][t];
            let mut clean = true;
            for i in (t + 1)..rows_n {
                let f = m[i][t].div_euclid(p);
                if f != 0 {
                    for j in t..n {
                        m[i][j] -= f * m[t][j];
                    }
                }
                if m[i][t] != 0 {
                    clean = false;
                }
            }
            for j in (t + 1)..n {
                let f = m[t][j].div_euclid(p);
                if f != 0 {
                    for row in m.iter_mut() {
                        row[j] -= f * row[t];
                    }
                    for row in q.iter_mut() {
                        let delta = f * row[t];
                        row[j] -= delta;
                    }
                }
                if m[t][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        t += 1;
    }
    finish_snf(m, q, t.min(n), n)
}

fn finish_snf(
    m: Vec<Vec<i128>>,
    mut q: Vec<Vec<i128>>,
    rank: usize,
    n: usize,
) -> (Vec<i128>, Vec<Vec<i128>>) {
    let mut diag: Vec<i128> = (0..n)
        .map(|i| if i < rank && i < m.len() { m[i][i] } else { 0 })
        .collect();
    // enforce the divisibility chain d_i | d_{i+1}: on a block
    // diag(a, b) with g = xa + yb, the unimodular column transform
    // [[x, -b/g], [y, a/g]] together with row operations yields
    // diag(g, lcm(a, b))
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..n.saturating_sub(1) {
            let (a, b) = (diag[i], diag[i + 1]);
            if a != 0 && b != 0 && b % a != 0 {
                let (g, x, y) = extended_gcd(a, b);
                let l = a / g * b;
                for row in q.iter_mut() {
                    let (qi, qj) = (row[i], row[i + 1]);
                    row[i] = x * qi + y * qj;
                    row[i + 1] = (-b / g) * qi + (a / g) * qj;
                }
                diag[i] = g;
                diag[i + 1] = l;
                changed = true;
            }
        }
    }
    (diag, q)
}


/// (g, x, y) with ax + by = g.
fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        return (a.abs(), a.signum(), 0);
    }
    let (g, x, y) = extended_gcd(b, a % b);
    (g, y, x - (a / b) * y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    /// Commutator-closure oracle for the derived subgroup.
    fn brute_derived(g: &FiniteGroup) -> Vec<bool> {
        let v = g.order();
        let mut gens = vec![false; v];
        for a in 0..v {
            for b in 0..v {
                gens[g.commutator(a, b)] = true;
            }
        }
        closure(g, &gens)
    }

    #[test]
    fn abelian_groups_have_trivial_derived_subgroup() {
        let g = GroupSpec::Cyclic(12).build().unwrap();
        let ns = NormalStructure::compute(&g);
        assert_eq!(ns.derived_order(), 1);
        assert!(ns.is_solvable);
        assert_eq!(ns.abelianization.invariant_factors, vec![12]);
    }

    #[test]
    fn frobenius_57_derived_is_c19() {
        let g = GroupSpec::Metacyclic { q: 19, m: 3, t: 7 }.build().unwrap();
        let ns = NormalStructure::compute(&g);
        assert_eq!(ns.derived_order(), 19);
        assert_eq!(ns.derived_members, brute_derived(&g));
        assert_eq!(ns.abelianization.invariant_factors, vec![3]);
        assert!(ns.is_solvable);
    }

    #[test]
    fn order_183_large_classes_avoid_derived_subgroup() {
        let g = GroupSpec::Metacyclic { q: 61, m: 3, t: 13 }.build().unwrap();
        let ns = NormalStructure::compute(&g);
        let cd = super::super::ConjugacyData::compute(&g);
        for j in 0..cd.num_classes {
            if cd.sizes[j] == 61 {
                for &x in &cd.members[j] {
                    assert!(!ns.derived_members[x as usize]);
                }
            }
        }
    }

    #[test]
    fn klein_four_abelianization() {
        let spec = GroupSpec::DirectProduct(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)]);
        let g = spec.build().unwrap();
        let ns = NormalStructure::compute(&g);
        assert_eq!(ns.abelianization.invariant_factors, vec![2, 2]);
        // projection is a homomorphism onto the stated group
        let a = &ns.abelianization;
        for x in 0..4 {
            for y in 0..4 {
                let lhs = &a.projection[g.mul(x, y)];
                let rhs: Vec<u64> = a.projection[x]
                    .iter()
                    .zip(&a.projection[y])
                    .zip(&a.invariant_factors)
                    .map(|((u, v), d)| (u + v) % d)
                    .collect();
                assert_eq!(*lhs, rhs);
            }
        }
        let distinct: std::collections::BTreeSet<_> = a.projection.iter().cloned().collect();
        assert_eq!(distinct.len(), 4);
    }

    #[test]
    fn dihedral_center_and_series() {
        let g = GroupSpec::Dihedral(4).build().unwrap();
        let ns = NormalStructure::compute(&g);
        // Z(D4) = {1, r^2}
        assert_eq!(ns.center_members.iter().filter(|&&b| b).count(), 2);
        assert!(ns.is_solvable);
        assert_eq!(ns.abelianization.invariant_factors, vec![2, 2]);
        assert_eq!(ns.derived_members, brute_derived(&g));
    }

    #[test]
    fn abelianization_projection_is_a_homomorphism_everywhere() {
        for spec in [
            GroupSpec::Metacyclic { q: 25, m: 4, t: 7 },
            GroupSpec::Dihedral(6),
            GroupSpec::DirectProduct(vec![GroupSpec::Cyclic(6), GroupSpec::Cyclic(4)]),
            "elab(2,2,[0,1;1,1])".parse().unwrap(),
        ] {
            let g = spec.build().unwrap();
            let ns = NormalStructure::compute(&g);
            let a = &ns.abelianization;
            assert_eq!(
                a.order() as usize,
                g.order() / ns.derived_order(),
                "quotient order for {}",
                g.label()
            );
            for x in 0..g.order() {
                for y in 0..g.order() {
                    let lhs = &a.projection[g.mul(x, y)];
                    let rhs: Vec<u64> = a.projection[x]
                        .iter()
                        .zip(&a.projection[y])
                        .zip(&a.invariant_factors)
                        .map(|((u, v), d)| (u + v) % d)
                        .collect();
                    assert_eq!(*lhs, rhs);
                }
            }
            // kernel of the projection is exactly G'
            for x in 0..g.order() {
                let trivial = a.projection[x].iter().all(|&c| c == 0);
                assert_eq!(trivial, ns.derived_members[x]);
            }
        }
    }
}
