//! Dense-table finite groups and their construction.
//!
//! Groups are stored as a full multiplication table over element indices
//! with identity fixed at index 0. Target orders are small (≤ ~1500), so
//! the v×v table trades memory for O(1) products, which every downstream
//! algorithm leans on.

mod conjugacy;
mod cosets;
mod normal;

pub use conjugacy::ConjugacyData;
pub use cosets::CosetPartition;
pub use normal::{Abelianization, NormalStructure};

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::arith::{gcd, mult_order};

/// Orders at or below this bound get exhaustive associativity checking;
/// larger tables are spot-checked on 10·v² seeded random triples.
const EXHAUSTIVE_ASSOC_BOUND: usize = 200;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("invalid group descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("{t} has multiplicative order {actual:?} mod {q}, expected {m}")]
    BadActionOrder { q: u64, m: u64, t: u64, actual: Option<u64> },
    #[error("malformed group table: {0}")]
    Format(String),
    #[error("table is not a Latin square at row {row}, column {col}")]
    NotLatin { row: usize, col: usize },
    #[error("index {0} has no identity behaviour (identity must be 0)")]
    BadIdentity(usize),
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("associativity fails on triple ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("mask is not a subgroup (closure fails at {a}·{b})")]
    NotSubgroup { a: usize, b: usize },
    #[error("subgroup is not normal (conjugate of {n} by {g} escapes)")]
    NotNormal { n: usize, g: usize },
}

/// A finite group of order `v` as a full multiplication table.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    mult: Vec<u32>,
    inv: Vec<u32>,
    elt_order: Vec<u32>,
    label: String,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn order_of(&self, a: usize) -> usize {
        self.elt_order[a] as usize
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> u64 {
        let mut e = 1u64;
        for a in 0..self.order {
            e = crate::arith::lcm(e, self.elt_order[a] as u64);
        }
        e
    }

    pub fn is_abelian(&self) -> bool {
        for a in 0..self.order {
            for b in (a + 1)..self.order {
                if self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
            }
        }
        true
    }

    pub fn conjugate(&self, x: usize, by: usize) -> usize {
        self.mul(self.inv(by), self.mul(x, by))
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.inv(a), self.mul(self.inv(b), self.mul(a, b)))
    }

    pub fn pow(&self, a: usize, mut e: u64) -> usize {
        let mut acc = 0usize;
        let mut base = a;
        loop {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            e >>= 1;
            if e == 0 {
                return acc;
            }
            base = self.mul(base, base);
        }
    }

    /// Builds a group from a raw table, running the full validation suite.
    pub fn from_table(mult: Vec<Vec<usize>>, label: impl Into<String>) -> Result<Self, GroupError> {
        let v = mult.len();
        if v == 0 {
            return Err(GroupError::Format("empty table".into()));
        }
        let mut flat = Vec::with_capacity(v * v);
        for (i, row) in mult.iter().enumerate() {
            if row.len() != v {
                return Err(GroupError::Format(format!(
                    "row {i} has {} entries, expected {v}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= v {
                    return Err(GroupError::Format(format!(
                        "entry {x} out of range in row {i}"
                    )));
                }
                flat.push(x as u32);
            }
        }
        Self::from_flat(v, flat, label.into())
    }

    fn from_flat(v: usize, mult: Vec<u32>, label: String) -> Result<Self, GroupError> {
        let at = |a: usize, b: usize| mult[a * v + b] as usize;
        for i in 0..v {
            if at(0, i) != i || at(i, 0) != i {
                return Err(GroupError::BadIdentity(i));
            }
        }
        // Latin square: every row and column is a permutation.
        let mut seen = vec![false; v];
        for r in 0..v {
            seen.iter_mut().for_each(|s| *s = false);
            for c in 0..v {
                let x = at(r, c);
                if seen[x] {
                    return Err(GroupError::NotLatin { row: r, col: c });
                }
                seen[x] = true;
            }
        }
        for c in 0..v {
            seen.iter_mut().for_each(|s| *s = false);
            for r in 0..v {
                let x = at(r, c);
                if seen[x] {
                    return Err(GroupError::NotLatin { row: r, col: c });
                }
                seen[x] = true;
            }
        }
        let mut inv = vec![u32::MAX; v];
        for a in 0..v {
            for b in 0..v {
                if at(a, b) == 0 {
                    inv[a] = b as u32;
                    break;
                }
            }
            if inv[a] == u32::MAX {
                return Err(GroupError::NoInverse(a));
            }
        }
        // Associativity; exhaustive at small orders, seeded sampling above.
        if v <= EXHAUSTIVE_ASSOC_BOUND {
            for a in 0..v {
                for b in 0..v {
                    let ab = at(a, b);
                    for c in 0..v {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(GroupError::NotAssociative { a, b, c });
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x9e3779b97f4a7c15);
            for _ in 0..10 * v * v {
                let a = rng.gen_range(0..v);
                let b = rng.gen_range(0..v);
                let c = rng.gen_range(0..v);
                if at(at(a, b), c) != at(a, at(b, c)) {
                    return Err(GroupError::NotAssociative { a, b, c });
                }
            }
        }
        let mut elt_order = vec![0u32; v];
        for a in 0..v {
            let mut x = a;
            let mut n = 1;
            while x != 0 {
                x = at(x, a);
                n += 1;
            }
            elt_order[a] = n;
        }
        Ok(FiniteGroup { order: v, mult, inv, elt_order, label })
    }

    /// Parses the group table text format: first non-comment line is the
    /// order, then v rows of v indices; `#` starts a comment.
    pub fn ingest_table(text: &str) -> Result<Self, GroupError> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let v: usize = lines
            .next()
            .ok_or_else(|| GroupError::Format("missing order line".into()))?
            .parse()
            .map_err(|_| GroupError::Format("order line is not an integer".into()))?;
        let mut rows = Vec::with_capacity(v);
        for i in 0..v {
            let line = lines
                .next()
                .ok_or_else(|| GroupError::Format(format!("missing row {i}")))?;
            let row: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
            let row = row.map_err(|_| GroupError::Format(format!("bad integer in row {i}")))?;
            rows.push(row);
        }
        FiniteGroup::from_table(rows, format!("ingested order-{v} table"))
    }

    /// Writes the group table text format.
    pub fn export_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# {}\n{}\n", self.label, self.order));
        for a in 0..self.order {
            let row: Vec<String> = (0..self.order)
                .map(|b| self.mul(a, b).to_string())
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Construction descriptor for the groups this crate can build directly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    Dihedral(u64),
    /// C_q ⋊ C_m with the C_m generator acting as x ↦ x^t; t must have
    /// multiplicative order m mod q.
    Metacyclic { q: u64, m: u64, t: u64 },
    DirectProduct(Vec<GroupSpec>),
    /// Elementary abelian p^d extended by the cyclic group generated by an
    /// explicit invertible d×d matrix over F_p.
    ElementaryByMatrix { p: u64, d: usize, matrix: Vec<Vec<u64>> },
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        match self {
            GroupSpec::Cyclic(n) => build_cyclic(*n),
            GroupSpec::Dihedral(n) => build_dihedral(*n),
            GroupSpec::Metacyclic { q, m, t } => build_metacyclic(*q, *m, *t),
            GroupSpec::DirectProduct(parts) => build_product(parts),
            GroupSpec::ElementaryByMatrix { p, d, matrix } => build_matrix_action(*p, *d, matrix),
        }
    }
}

fn build_cyclic(n: u64) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidDescriptor("cyclic(0)".into()));
    }
    let n = n as usize;
    let table = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    FiniteGroup::from_table(table, format!("cyclic({n})"))
}

fn build_dihedral(n: u64) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidDescriptor("dihedral(0)".into()));
    }
    let n = n as usize;
    let v = 2 * n;
    // indices: rotations r^i at i, reflections s·r^i at n + i
    let mut table = vec![vec![0usize; v]; v];
    for i in 0..n {
        for j in 0..n {
            table[i][j] = (i + j) % n;
            table[i][n + j] = n + (j + n - i) % n;
            table[n + i][j] = n + (i + j) % n;
            table[n + i][n + j] = (j + n - i) % n;
        }
    }
    FiniteGroup::from_table(table, format!("dihedral({n})"))
}

fn build_metacyclic(q: u64, m: u64, t: u64) -> Result<FiniteGroup, GroupError> {
    if q == 0 || m == 0 {
        return Err(GroupError::InvalidDescriptor(format!("metacyclic({q},{m},{t})")));
    }
    if gcd(t % q.max(1), q) != 1 && q > 1 {
        return Err(GroupError::InvalidDescriptor(format!(
            "metacyclic({q},{m},{t}): t not coprime to q"
        )));
    }
    let actual = mult_order(t % q, q);
    if q > 1 && actual != Some(m) {
        return Err(GroupError::BadActionOrder { q, m, t, actual });
    }
    let qn = q as usize;
    let mn = m as usize;
    let v = qn * mn;
    // index (u, a) -> a*q + u; (u,a)(w,b) = (u + t^a w, a + b)
    let mut tpow = vec![1u64; mn];
    for a in 1..mn {
        tpow[a] = tpow[a - 1] * t % q;
    }
    let mut table = vec![vec![0usize; v]; v];
    for a in 0..mn {
        for u in 0..qn {
            let x = a * qn + u;
            for b in 0..mn {
                for w in 0..qn {
                    let y = b * qn + w;
                    let nu = (u as u64 + tpow[a] * w as u64) % q;
                    let na = (a + b) % mn;
                    table[x][y] = na * qn + nu as usize;
                }
            }
        }
    }
    FiniteGroup::from_table(table, format!("metacyclic({q},{m},{t})"))
}

fn build_product(parts: &[GroupSpec]) -> Result<FiniteGroup, GroupError> {
    if parts.is_empty() {
        return Err(GroupError::InvalidDescriptor("empty product".into()));
    }
    let groups: Result<Vec<FiniteGroup>, _> = parts.iter().map(GroupSpec::build).collect();
    let groups = groups?;
    let v: usize = groups.iter().map(|g| g.order()).product();
    let decode = |mut x: usize| -> Vec<usize> {
        groups
            .iter()
            .map(|g| {
                let c = x % g.order();
                x /= g.order();
                c
            })
            .collect()
    };
    let encode = |coords: &[usize]| -> usize {
        let mut x = 0;
        for (g, &c) in groups.iter().zip(coords).rev() {
            x = x * g.order() + c;
        }
        x
    };
    let mut table = vec![vec![0usize; v]; v];
    for x in 0..v {
        let cx = decode(x);
        for y in 0..v {
            let cy = decode(y);
            let cz: Vec<usize> = groups
                .iter()
                .enumerate()
                .map(|(i, g)| g.mul(cx[i], cy[i]))
                .collect();
            table[x][y] = encode(&cz);
        }
    }
    let label = format!(
        "product({})",
        groups.iter().map(|g| g.label().to_string()).collect::<Vec<_>>().join(", ")
    );
    FiniteGroup::from_table(table, label)
}

fn build_matrix_action(p: u64, d: usize, matrix: &[Vec<u64>]) -> Result<FiniteGroup, GroupError> {
    if !crate::arith::is_prime(p) || d == 0 || matrix.len() != d
        || matrix.iter().any(|r| r.len() != d)
    {
        return Err(GroupError::InvalidDescriptor(format!(
            "elementary-by-matrix({p},{d},..): bad shape or non-prime p"
        )));
    }
    let matmul = |a: &[Vec<u64>], b: &[Vec<u64>]| -> Vec<Vec<u64>> {
        let mut out = vec![vec![0u64; d]; d];
        for i in 0..d {
            for j in 0..d {
                let mut s = 0;
                for k in 0..d {
                    s = (s + a[i][k] * b[k][j]) % p;
                }
                out[i][j] = s;
            }
        }
        out
    };
    let ident: Vec<Vec<u64>> = (0..d)
        .map(|i| (0..d).map(|j| u64::from(i == j)).collect())
        .collect();
    // cyclic order of the matrix; also certifies invertibility
    let mut powers = vec![ident.clone()];
    let mut cur = matmul(&ident, matrix);
    let bound = (0..d).fold(1u64, |acc, _| acc.saturating_mul(p)); // |GL_d| dominates p^d anyway
    let mut guard = 0u64;
    while cur != ident {
        powers.push(cur.clone());
        cur = matmul(&cur, matrix);
        guard += 1;
        if guard > bound * bound {
            return Err(GroupError::InvalidDescriptor(
                "matrix action does not close (singular matrix?)".into(),
            ));
        }
    }
    let m = powers.len();
    let pd = (p as usize).pow(d as u32);
    let decode = |mut x: usize| -> Vec<u64> {
        (0..d)
            .map(|_| {
                let c = (x % p as usize) as u64;
                x /= p as usize;
                c
            })
            .collect()
    };
    let encode = |vab: &[u64]| -> usize {
        vab.iter().rev().fold(0usize, |acc, &c| acc * p as usize + c as usize)
    };
    let apply = |mat: &[Vec<u64>], vec: &[u64]| -> Vec<u64> {
        (0..d)
            .map(|i| (0..d).map(|j| mat[i][j] * vec[j] % p).sum::<u64>() % p)
            .collect()
    };
    let v = pd * m;
    let mut table = vec![vec![0usize; v]; v];
    for a in 0..m {
        for xi in 0..pd {
            let x = a * pd + xi;
            let xv = decode(xi);
            for b in 0..m {
                for yi in 0..pd {
                    let y = b * pd + yi;
                    let yv = decode(yi);
                    let moved = apply(&powers[a], &yv);
                    let sum: Vec<u64> = xv.iter().zip(&moved).map(|(u, w)| (u + w) % p).collect();
                    table[x][y] = ((a + b) % m) * pd + encode(&sum);
                }
            }
        }
    }
    FiniteGroup::from_table(table, format!("elementary({p}^{d}) by matrix of order {m}"))
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic({n})"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral({n})"),
            GroupSpec::Metacyclic { q, m, t } => write!(f, "metacyclic({q},{m},{t})"),
            GroupSpec::DirectProduct(parts) => {
                write!(f, "product(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
            GroupSpec::ElementaryByMatrix { p, d, matrix } => {
                let rows: Vec<String> = matrix
                    .iter()
                    .map(|r| r.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
                    .collect();
                write!(f, "elab({p},{d},[{}])", rows.join(";"))
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_spec(s.trim()).ok_or_else(|| GroupError::InvalidDescriptor(s.to_string()))
    }
}

fn parse_spec(s: &str) -> Option<GroupSpec> {
    let open = s.find('(')?;
    let name = s[..open].trim();
    let body = s[open + 1..].strip_suffix(')')?;
    match name {
        "cyclic" => Some(GroupSpec::Cyclic(body.trim().parse().ok()?)),
        "dihedral" => Some(GroupSpec::Dihedral(body.trim().parse().ok()?)),
        "metacyclic" => {
            let nums: Vec<u64> = body
                .split(',')
                .map(|x| x.trim().parse().ok())
                .collect::<Option<_>>()?;
            if nums.len() != 3 {
                return None;
            }
            Some(GroupSpec::Metacyclic { q: nums[0], m: nums[1], t: nums[2] })
        }
        "product" => {
            let parts = split_top_level(body)?;
            let specs: Option<Vec<GroupSpec>> = parts.iter().map(|p| parse_spec(p)).collect();
            Some(GroupSpec::DirectProduct(specs?))
        }
        "elab" => {
            // elab(p,d,[r00,r01;r10,r11])
            let parts = split_top_level(body)?;
            if parts.len() != 3 {
                return None;
            }
            let p: u64 = parts[0].trim().parse().ok()?;
            let d: usize = parts[1].trim().parse().ok()?;
            let m = parts[2].trim();
            let m = m.strip_prefix('[')?.strip_suffix(']')?;
            let matrix: Option<Vec<Vec<u64>>> = m
                .split(';')
                .map(|row| {
                    row.split(',')
                        .map(|x| x.trim().parse().ok())
                        .collect::<Option<Vec<u64>>>()
                })
                .collect();
            Some(GroupSpec::ElementaryByMatrix { p, d, matrix: matrix? })
        }
        _ => None,
    }
}

/// Splits on commas not nested inside parentheses or brackets.
fn split_top_level(s: &str) -> Option<Vec<String>> {
    let mut depth = 0i32;
    let mut out = Vec::new();
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' | '[' => {
                depth += 1;
                cur.push(ch);
            }
            ')' | ']' => {
                depth -= 1;
                if depth < 0 {
                    return None;
                }
                cur.push(ch);
            }
            ',' if depth == 0 => {
                out.push(cur.trim().to_string());
                cur = String::new();
            }
            _ => cur.push(ch),
        }
    }
    if depth != 0 {
        return None;
    }
    out.push(cur.trim().to_string());
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group() {
        let g = GroupSpec::Cyclic(1).build().unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.mul(0, 0), 0);
    }

    #[test]
    fn metacyclic_19_3_7_is_a_nonabelian_group_of_order_57 () {
        // 7^3 = 343 ≡ 1 (mod 19); construction passes the exhaustive
        // Latin-square and associativity validation
        let g = GroupSpec::Metacyclic { q: 19, m: 3, t: 7 }.build().unwrap();
        assert_eq!(g.order(), 57);
        assert!(!g.is_abelian());
    }

    #[test]
    fn metacyclic_183_exists_and_is_unique_nonabelian() {
        let g = GroupSpec::Metacyclic { q: 61, m: 3, t: 13 }.build().unwrap();
        assert_eq!(g.order(), 183);
        assert!(!g.is_abelian());
        // Sylow counting oracle for uniqueness of the nonabelian group of
        // order 183 = 3·61: n_61 | 3 and ≡ 1 mod 61 forces a normal C61;
        // the action of C3 is by an order-3 unit mod 61, and all faithful
        // choices give isomorphic semidirect products: the order-3 units
        // mod 61 are exactly {13, 47}, inverse to each other.
        let units: Vec<u64> = (2..61).filter(|&t| mult_order(t, 61) == Some(3)).collect();
        assert_eq!(units, vec![13, 47]);
        assert_eq!((13 * 47) % 61, 1);
    }

    #[test]
    fn bad_action_order_is_rejected() {
        let err = GroupSpec::Metacyclic { q: 19, m: 3, t: 2 }.build().unwrap_err();
        assert!(matches!(err, GroupError::BadActionOrder { .. }));
        assert!(GroupSpec::Metacyclic { q: 9, m: 2, t: 3 }.build().is_err());
    }

    #[test]
    fn dihedral_matches_presentation() {
        let g = GroupSpec::Dihedral(4).build().unwrap();
        assert_eq!(g.order(), 8);
        assert!(!g.is_abelian());
        // every reflection is an involution
        for i in 4..8 {
            assert_eq!(g.order_of(i), 2);
        }
    }

    #[test]
    fn table_round_trip() {
        let g = GroupSpec::Cyclic(4).build().unwrap();
        let text = g.export_table();
        let h = FiniteGroup::ingest_table(&text).unwrap();
        assert_eq!(g.order(), h.order());
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(g.mul(a, b), h.mul(a, b));
            }
        }
    }

    #[test]
    fn non_associative_loop_is_rejected_with_failing_triple() {
        // smallest loops that are not groups have order 5; build one and
        // check the validator names a concrete failing triple
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 3, 4, 0, 1],
            vec![3, 4, 1, 2, 0],
            vec![4, 2, 0, 1, 3],
        ];
        match FiniteGroup::from_table(table, "loop") {
            Err(GroupError::NotAssociative { a, b, c }) => {
                assert!(a < 5 && b < 5 && c < 5);
            }
            other => panic!("expected associativity failure, got {other:?}"),
        }
    }

    #[test]
    fn latin_square_violation_is_rejected() {
        let table = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(
            FiniteGroup::from_table(table, "bad"),
            Err(GroupError::NotLatin { .. })
        ));
    }

    #[test]
    fn spec_parsing_round_trips() {
        for s in [
            "cyclic(12)",
            "dihedral(6)",
            "metacyclic(19,3,7)",
            "product(cyclic(2),dihedral(3))",
            "elab(2,2,[0,1;1,1])",
        ] {
            let spec: GroupSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            spec.build().unwrap();
        }
        assert!("frobnicate(3)".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn alternating_four_via_matrix_action() {
        // F_2^2 extended by an order-3 matrix is A4
        let spec: GroupSpec = "elab(2,2,[0,1;1,1])".parse().unwrap();
        let g = spec.build().unwrap();
        assert_eq!(g.order(), 12);
        assert!(!g.is_abelian());
        let mut orders: Vec<usize> = (0..12).map(|a| g.order_of(a)).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3]);
    }
}
