//! Search and certification: brute-force verification, constrained
//! random-restart hill climbing, exhaustive backtracking at small orders,
//! and 0/1 feasibility model export in the LP file format.
//!
//! Candidates are always built from inverse-closed atoms: an involution is
//! an atom on its own, any other element pairs with its inverse. A
//! candidate therefore stays inverse-closed at every step, and a move
//! swaps one atom for another inside the same class slot, so the class
//! profile is invariant during a climb.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::group::{ConjugacyData, FiniteGroup};
use crate::srg::SrgParams;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("candidate contains the identity")]
    ContainsIdentity,
    #[error("candidate is empty")]
    Empty,
    #[error("candidate is not inverse-closed: element {0} lacks its inverse")]
    NotInverseClosed(usize),
    #[error("difference counts are not two-valued (element {0} has count {1})")]
    NotTwoValued(usize, i64),
    #[error("difference-count route and group-ring square disagree at element {0}")]
    OracleMismatch(usize),
    #[error("vector is inconsistent with the class structure: {0}")]
    BadVector(String),
}

/// Verifies a candidate by direct difference counting, cross-checked by an
/// independent group-ring squaring route, and returns the parameters.
pub fn verify_pds(g: &FiniteGroup, members: &[bool]) -> Result<SrgParams, SearchError> {
    let v = g.order();
    assert_eq!(members.len(), v);
    if members[0] {
        return Err(SearchError::ContainsIdentity);
    }
    let d: Vec<usize> = (0..v).filter(|&x| members[x]).collect();
    if d.is_empty() {
        return Err(SearchError::Empty);
    }
    for &x in &d {
        if !members[g.inv(x)] {
            return Err(SearchError::NotInverseClosed(x));
        }
    }
    // route 1: difference counts over ordered pairs x ≠ y
    let mut cnt = vec![0i64; v];
    for &x in &d {
        for &y in &d {
            if x != y {
                cnt[g.mul(x, g.inv(y))] += 1;
            }
        }
    }
    let k = d.len() as i64;
    let lambda = cnt[d[0]];
    let mut mu = None;
    for x in 1..v {
        if members[x] {
            if cnt[x] != lambda {
                return Err(SearchError::NotTwoValued(x, cnt[x]));
            }
        } else {
            match mu {
                None => mu = Some(cnt[x]),
                Some(m) => {
                    if cnt[x] != m {
                        return Err(SearchError::NotTwoValued(x, cnt[x]));
                    }
                }
            }
        }
    }
    let mu = mu.unwrap_or(0);
    // route 2: full group-ring square must equal k·1 + λD + μ(G − D − 1)
    let mut sq = vec![0i64; v];
    for &x in &d {
        for &y in &d {
            sq[g.mul(x, y)] += 1;
        }
    }
    if sq[0] != k {
        return Err(SearchError::OracleMismatch(0));
    }
    for x in 1..v {
        let expected = if members[x] { lambda } else { mu };
        if sq[x] != expected {
            return Err(SearchError::OracleMismatch(x));
        }
    }
    Ok(SrgParams::new(v as i64, k, lambda, mu))
}

/// Per-class intersection counts of a subset.
pub fn class_profile(cd: &ConjugacyData, members: &[bool]) -> Vec<i64> {
    let mut out = vec![0i64; cd.num_classes];
    for (x, &m) in members.iter().enumerate() {
        if m {
            out[cd.class_of[x] as usize] += 1;
        }
    }
    out
}

/// An inverse-closed atom: {x, x⁻¹} for non-involutions, {x} for
/// involutions. Atoms never contain the identity.
#[derive(Debug, Clone)]
pub struct Atom {
    pub members: Vec<u32>,
}

/// All atoms grouped into slots: one slot per inverse-closed class orbit
/// {j, j*}, keyed by min(j, j*).
#[derive(Debug, Clone)]
pub struct AtomSlots {
    pub slots: Vec<Slot>,
}

#[derive(Debug, Clone)]
pub struct Slot {
    /// representative class (min of the pair)
    pub class: usize,
    /// partner class (equal for real classes)
    pub partner: usize,
    pub atoms: Vec<Atom>,
}

pub fn atom_slots(g: &FiniteGroup, cd: &ConjugacyData) -> AtomSlots {
    let mut slots = Vec::new();
    for j in 0..cd.num_classes {
        let jstar = cd.inverse_class[j] as usize;
        if jstar < j || j == 0 {
            continue;
        }
        let mut atoms = Vec::new();
        for &x in &cd.members[j] {
            let xi = g.inv(x as usize);
            if xi == x as usize {
                atoms.push(Atom { members: vec![x] });
            } else if (xi as u32) > x || jstar != j {
                // real classes pair internally once; non-real classes take
                // every member of the smaller class with its mirror
                let mine = if jstar == j { xi as u32 > x } else { true };
                if mine {
                    atoms.push(Atom { members: vec![x, xi as u32] });
                }
            }
        }
        slots.push(Slot { class: j, partner: jstar, atoms });
    }
    AtomSlots { slots }
}

/// Atom quota per slot for a target class vector; errors when the vector
/// cannot be met by inverse-closed atoms.
pub fn slot_quotas(
    slots: &AtomSlots,
    cd: &ConjugacyData,
    vector: &[i64],
) -> Result<Vec<usize>, SearchError> {
    if vector.len() != cd.num_classes {
        return Err(SearchError::BadVector("vector length mismatch".into()));
    }
    if vector[0] != 0 {
        return Err(SearchError::BadVector("identity class must be 0".into()));
    }
    let mut quotas = Vec::with_capacity(slots.slots.len());
    for slot in &slots.slots {
        let j = slot.class;
        let jstar = slot.partner;
        let d = vector[j];
        if vector[jstar] != d {
            return Err(SearchError::BadVector(format!(
                "classes {j} and {jstar} are inverse-paired but get {d} and {}",
                vector[jstar]
            )));
        }
        if d < 0 || d > cd.sizes[j] as i64 {
            return Err(SearchError::BadVector(format!(
                "class {j} wants {d} of {} elements",
                cd.sizes[j]
            )));
        }
        let quota = if jstar == j && cd.rep_orders[j] > 2 {
            if d % 2 != 0 {
                return Err(SearchError::BadVector(format!(
                    "real non-involution class {j} needs an even count, got {d}"
                )));
            }
            (d / 2) as usize
        } else {
            d as usize
        };
        if quota > slot.atoms.len() {
            return Err(SearchError::BadVector(format!(
                "class {j} quota {quota} exceeds {} available atoms",
                slot.atoms.len()
            )));
        }
        quotas.push(quota);
    }
    Ok(quotas)
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub seed: u64,
    pub max_restarts: usize,
    /// moves per climb before a restart
    pub max_steps: usize,
    /// plateau length triggering a restart
    pub plateau_limit: usize,
    pub budget_ms: Option<u64>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            seed: 1,
            max_restarts: 200,
            max_steps: 2000,
            plateau_limit: 50,
            budget_ms: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct PdsCandidate {
    pub members: Vec<bool>,
    pub profile: Vec<i64>,
    pub params: SrgParams,
}

/// Incremental difference-count state; the cost is
/// Σ_{g≠1} (count(g) − target(g))² with target λ on members, μ elsewhere.
struct ClimbState<'a> {
    g: &'a FiniteGroup,
    lambda: i64,
    mu: i64,
    members: Vec<bool>,
    chosen: Vec<usize>,
    cnt: Vec<i64>,
    cost: i64,
}

impl<'a> ClimbState<'a> {
    fn new(g: &'a FiniteGroup, lambda: i64, mu: i64) -> Self {
        let v = g.order();
        let mut s = ClimbState {
            g,
            lambda,
            mu,
            members: vec![false; v],
            chosen: Vec::new(),
            cnt: vec![0; v],
            cost: 0,
        };
        // empty set: every nonidentity element contributes (0 − μ)²
        s.cost = (v as i64 - 1) * mu * mu;
        s
    }

    #[inline]
    fn target(&self, x: usize) -> i64 {
        if self.members[x] {
            self.lambda
        } else {
            self.mu
        }
    }

    #[inline]
    fn bump(&mut self, idx: usize, delta: i64) {
        let t = self.target(idx);
        let old = self.cnt[idx];
        let new = old + delta;
        self.cost += (new - t) * (new - t) - (old - t) * (old - t);
        self.cnt[idx] = new;
    }

    fn add_element(&mut self, x: usize) {
        debug_assert!(!self.members[x] && x != 0);
        // target at x flips μ → λ before counting new differences
        let c = self.cnt[x];
        self.cost += (c - self.lambda) * (c - self.lambda) - (c - self.mu) * (c - self.mu);
        self.members[x] = true;
        let xi = self.g.inv(x);
        for i in 0..self.chosen.len() {
            let d = self.chosen[i];
            let di = self.g.inv(d);
            self.bump(self.g.mul(x, di), 1);
            self.bump(self.g.mul(d, xi), 1);
        }
        self.chosen.push(x);
    }

    fn remove_element(&mut self, x: usize) {
        debug_assert!(self.members[x]);
        let pos = self.chosen.iter().position(|&y| y == x).unwrap();
        self.chosen.swap_remove(pos);
        let xi = self.g.inv(x);
        for i in 0..self.chosen.len() {
            let d = self.chosen[i];
            let di = self.g.inv(d);
            self.bump(self.g.mul(x, di), -1);
            self.bump(self.g.mul(d, xi), -1);
        }
        self.members[x] = false;
        let c = self.cnt[x];
        self.cost += (c - self.mu) * (c - self.mu) - (c - self.lambda) * (c - self.lambda);
    }

    fn add_atom(&mut self, a: &Atom) {
        for &x in &a.members {
            self.add_element(x as usize);
        }
    }

    fn remove_atom(&mut self, a: &Atom) {
        for &x in &a.members {
            self.remove_element(x as usize);
        }
    }
}

/// Steepest-descent hill climb over single atom swaps inside class slots,
/// keeping the class profile pinned to `vector` throughout. Restarts from
/// fresh seeded samples on plateaus. Returns the first verified set.
pub fn hill_climb(
    g: &FiniteGroup,
    cd: &ConjugacyData,
    params: &SrgParams,
    vector: &[i64],
    cfg: &SearchConfig,
) -> Result<Option<PdsCandidate>, SearchError> {
    let slots = atom_slots(g, cd);
    let quotas = slot_quotas(&slots, cd, vector)?;
    let started = Instant::now();
    for restart in 0..cfg.max_restarts {
        if let Some(limit) = cfg.budget_ms {
            if started.elapsed().as_millis() as u64 > limit {
                return Ok(None);
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (restart as u64).wrapping_mul(0x9e3779b97f4a7c15));
        if let Some(found) = climb_once(g, cd, params, vector, &slots, &quotas, cfg, &mut rng) {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

#[allow(clippy::too_many_arguments)]
fn climb_once(
    g: &FiniteGroup,
    cd: &ConjugacyData,
    params: &SrgParams,
    vector: &[i64],
    slots: &AtomSlots,
    quotas: &[usize],
    cfg: &SearchConfig,
    rng: &mut ChaCha8Rng,
) -> Option<PdsCandidate> {
    let mut state = ClimbState::new(g, params.lambda, params.mu);
    // selected[s] = indices into the slot's atom list
    let mut selected: Vec<Vec<usize>> = Vec::with_capacity(slots.slots.len());
    for (slot, &q) in slots.slots.iter().zip(quotas) {
        let mut idx: Vec<usize> = (0..slot.atoms.len()).collect();
        idx.shuffle(rng);
        let sel: Vec<usize> = idx.into_iter().take(q).collect();
        for &i in &sel {
            state.add_atom(&slot.atoms[i]);
        }
        selected.push(sel);
    }
    let mut plateau = 0usize;
    for _ in 0..cfg.max_steps {
        if state.cost == 0 {
            break;
        }
        // steepest descent over all (slot, out, in) swaps
        let mut best_delta = i64::MAX;
        let mut best: Vec<(usize, usize, usize)> = Vec::new(); // (slot, out pos, in atom)
        for (s, slot) in slots.slots.iter().enumerate() {
            if quotas[s] == 0 || quotas[s] == slot.atoms.len() {
                continue;
            }
            let in_pool: Vec<usize> = (0..slot.atoms.len())
                .filter(|i| !selected[s].contains(i))
                .collect();
            for out_pos in 0..selected[s].len() {
                let out_atom = selected[s][out_pos];
                state.remove_atom(&slot.atoms[out_atom]);
                for &in_atom in &in_pool {
                    state.add_atom(&slot.atoms[in_atom]);
                    let delta = state.cost;
                    state.remove_atom(&slot.atoms[in_atom]);
                    if delta < best_delta {
                        best_delta = delta;
                        best.clear();
                    }
                    if delta == best_delta {
                        best.push((s, out_pos, in_atom));
                    }
                }
                state.add_atom(&slot.atoms[out_atom]);
            }
        }
        let Some(&(s, out_pos, in_atom)) = best.choose(rng) else {
            break; // no moves available
        };
        let current = state.cost;
        if best_delta >= current {
            plateau += 1;
            if plateau > cfg.plateau_limit {
                return None; // restart
            }
        } else {
            plateau = 0;
        }
        let out_atom = selected[s][out_pos];
        state.remove_atom(&slots.slots[s].atoms[out_atom]);
        state.add_atom(&slots.slots[s].atoms[in_atom]);
        selected[s][out_pos] = in_atom;
    }
    if state.cost == 0 {
        let members = state.members.clone();
        let verified = verify_pds(g, &members).ok()?;
        if verified == *params {
            let profile = class_profile(cd, &members);
            debug_assert_eq!(profile, vector);
            return Some(PdsCandidate { members, profile, params: verified });
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Exists(PdsCandidateBox),
    NotExists { nodes: u64 },
    BudgetExhausted { nodes: u64 },
}

/// Boxed candidate so the enum stays comparable in tests.
#[derive(Debug, Clone)]
pub struct PdsCandidateBox(pub Box<PdsCandidate>);

impl PartialEq for PdsCandidateBox {
    fn eq(&self, other: &Self) -> bool {
        self.0.members == other.0.members
    }
}
impl Eq for PdsCandidateBox {}

/// Exhaustive backtracking over inverse-closed atoms matching `vector`.
/// `NotExists` is a completeness certificate. Slots are processed in
/// descending class-size order; difference counts prune on every atom.
pub fn exact_search(
    g: &FiniteGroup,
    cd: &ConjugacyData,
    params: &SrgParams,
    vector: &[i64],
    budget_ms: Option<u64>,
) -> Result<SearchOutcome, SearchError> {
    let mut slots = atom_slots(g, cd);
    let quotas_by_slot = slot_quotas(&slots, cd, vector)?;
    // attach quotas, order slots by descending class size for pruning power
    let mut order: Vec<usize> = (0..slots.slots.len()).collect();
    order.sort_by_key(|&s| std::cmp::Reverse((cd.sizes[slots.slots[s].class], slots.slots[s].class)));
    let ordered: Vec<(Slot, usize)> = order
        .iter()
        .map(|&s| (slots.slots[s].clone(), quotas_by_slot[s]))
        .collect();
    slots.slots.clear();

    let v = g.order();
    let max_count = params.lambda.max(params.mu);
    // slot position of each element's class, for the settled-μ prune
    let mut slot_pos = vec![usize::MAX; v];
    for (pos, (slot, _)) in ordered.iter().enumerate() {
        for j in [slot.class, slot.partner] {
            for &x in &cd.members[j] {
                slot_pos[x as usize] = pos;
            }
        }
    }

    struct Ctx<'a> {
        g: &'a FiniteGroup,
        ordered: &'a [(Slot, usize)],
        slot_pos: &'a [usize],
        lambda: i64,
        mu: i64,
        max_count: i64,
        nodes: u64,
        deadline: Option<Instant>,
        exhausted: bool,
    }

    struct State {
        members: Vec<bool>,
        chosen: Vec<usize>,
        cnt: Vec<i64>,
    }

    impl State {
        /// Adds an element, returns false on a pruned count.
        fn add(&mut self, ctx: &Ctx, x: usize, pos: usize) -> bool {
            self.members[x] = true;
            let xi = ctx.g.inv(x);
            let mut ok = true;
            for i in 0..self.chosen.len() {
                let d = self.chosen[i];
                let di = ctx.g.inv(d);
                for idx in [ctx.g.mul(x, di), ctx.g.mul(d, xi)] {
                    self.cnt[idx] += 1;
                    let c = self.cnt[idx];
                    if c > ctx.max_count
                        || (self.members[idx] && c > ctx.lambda)
                        || (!self.members[idx] && ctx.slot_pos[idx] < pos && c > ctx.mu)
                    {
                        ok = false;
                    }
                }
            }
            self.chosen.push(x);
            ok
        }

        fn remove(&mut self, ctx: &Ctx, x: usize) {
            let p = self.chosen.iter().position(|&y| y == x).unwrap();
            self.chosen.swap_remove(p);
            let xi = ctx.g.inv(x);
            for i in 0..self.chosen.len() {
                let d = self.chosen[i];
                let di = ctx.g.inv(d);
                self.cnt[ctx.g.mul(x, di)] -= 1;
                self.cnt[ctx.g.mul(d, xi)] -= 1;
            }
            self.members[x] = false;
        }
    }

    fn place_slot(
        ctx: &mut Ctx,
        state: &mut State,
        slot_idx: usize,
        atom_start: usize,
        remaining: usize,
        found: &mut Option<Vec<bool>>,
    ) {
        if found.is_some() || ctx.exhausted {
            return;
        }
        ctx.nodes += 1;
        if ctx.nodes % 4096 == 0 {
            if let Some(deadline) = ctx.deadline {
                if Instant::now() > deadline {
                    ctx.exhausted = true;
                    return;
                }
            }
        }
        if remaining == 0 {
            if slot_idx + 1 == ctx.ordered.len() {
                // full candidate: exact final check
                let ok = state.cnt.iter().enumerate().skip(1).all(|(x, &c)| {
                    c == if state.members[x] { ctx.lambda } else { ctx.mu }
                });
                if ok {
                    *found = Some(state.members.clone());
                }
            } else {
                let next_quota = ctx.ordered[slot_idx + 1].1;
                place_slot(ctx, state, slot_idx + 1, 0, next_quota, found);
            }
            return;
        }
        let atoms = &ctx.ordered[slot_idx].0.atoms;
        // remaining capacity prune
        if atoms.len() - atom_start < remaining {
            return;
        }
        for i in atom_start..atoms.len() {
            let atom = &ctx.ordered[slot_idx].0.atoms[i];
            let mut ok = true;
            let mut placed = 0;
            for &x in &atom.members {
                placed += 1;
                if !state.add(ctx, x as usize, slot_idx) {
                    ok = false;
                    break;
                }
            }
            if ok {
                place_slot(ctx, state, slot_idx, i + 1, remaining - 1, found);
            }
            for &x in atom.members.iter().take(placed).rev() {
                state.remove(ctx, x as usize);
            }
            if found.is_some() || ctx.exhausted {
                return;
            }
        }
    }

    let mut ctx = Ctx {
        g,
        ordered: &ordered,
        slot_pos: &slot_pos,
        lambda: params.lambda,
        mu: params.mu,
        max_count,
        nodes: 0,
        deadline: budget_ms.map(|ms| Instant::now() + std::time::Duration::from_millis(ms)),
        exhausted: false,
    };
    let mut state = State { members: vec![false; v], chosen: Vec::new(), cnt: vec![0; v] };
    let mut found = None;
    if ordered.is_empty() {
        return Ok(SearchOutcome::NotExists { nodes: 0 });
    }
    let first_quota = ordered[0].1;
    place_slot(&mut ctx, &mut state, 0, 0, first_quota, &mut found);
    if let Some(members) = found {
        let verified = verify_pds(g, &members).map_err(|_| {
            SearchError::BadVector("search returned a candidate that fails verification".into())
        })?;
        debug_assert_eq!(verified, *params);
        let profile = class_profile(cd, &members);
        return Ok(SearchOutcome::Exists(PdsCandidateBox(Box::new(PdsCandidate {
            members,
            profile,
            params: verified,
        }))));
    }
    if ctx.exhausted {
        Ok(SearchOutcome::BudgetExhausted { nodes: ctx.nodes })
    } else {
        Ok(SearchOutcome::NotExists { nodes: ctx.nodes })
    }
}

/// Emits a 0/1 feasibility model in the LP file format: one binary per
/// inverse-closed atom, class-sum equalities pinning the vector, and the
/// difference-count conditions linearized through product variables
/// y_{ab} ≤ x_a, y_{ab} ≤ x_b, y_{ab} ≥ x_a + x_b − 1.
pub fn export_milp(
    g: &FiniteGroup,
    cd: &ConjugacyData,
    params: &SrgParams,
    vector: &[i64],
) -> Result<String, SearchError> {
    let slots = atom_slots(g, cd);
    let quotas = slot_quotas(&slots, cd, vector)?;
    let atoms: Vec<(&Atom, usize)> = slots
        .slots
        .iter()
        .flat_map(|s| s.atoms.iter().map(move |a| (a, s.class)))
        .collect();
    let n = atoms.len();
    let v = g.order();
    // atom index of each element
    let mut atom_of = vec![usize::MAX; v];
    for (i, (a, _)) in atoms.iter().enumerate() {
        for &x in &a.members {
            atom_of[x as usize] = i;
        }
    }
    // w[{a,b}][gidx]: ordered pair products between atoms a and b
    use std::collections::BTreeMap;
    let mut w: BTreeMap<(usize, usize), BTreeMap<usize, i64>> = BTreeMap::new();
    for x in 1..v {
        let ax = atom_of[x];
        if ax == usize::MAX {
            continue;
        }
        for y in 1..v {
            if x == y {
                continue;
            }
            let ay = atom_of[y];
            if ay == usize::MAX {
                continue;
            }
            let key = (ax.min(ay), ax.max(ay));
            let gidx = g.mul(x, g.inv(y));
            *w.entry(key).or_default().entry(gidx).or_insert(0) += 1;
        }
    }
    let pair_keys: Vec<(usize, usize)> =
        w.keys().copied().filter(|(a, b)| a != b).collect();
    let mut out = String::new();
    out.push_str(&format!(
        "\\ PDS feasibility model: v={} k={} lambda={} mu={}\n",
        params.v, params.k, params.lambda, params.mu
    ));
    out.push_str("\\ x_i = 1 iff inverse-closed atom i is in the set\n");
    for (i, (a, class)) in atoms.iter().enumerate() {
        let elems: Vec<String> = a.members.iter().map(u32::to_string).collect();
        out.push_str(&format!("\\ x_{i}: elements {{{}}} class {}\n", elems.join(","), class));
    }
    out.push_str(&format!(
        "\\ variables: {} atoms + {} products; constraints: {} class sums + {} counts + {} links\n",
        n,
        pair_keys.len(),
        slots.slots.len(),
        v - 1,
        3 * pair_keys.len()
    ));
    out.push_str("Minimize\n obj: 0\nSubject To\n");
    for (si, (slot, &q)) in slots.slots.iter().zip(&quotas).enumerate() {
        let terms: Vec<String> = slot
            .atoms
            .iter()
            .map(|a| format!("x_{}", atom_of[a.members[0] as usize]))
            .collect();
        out.push_str(&format!(" class_{si}: {} = {q}\n", terms.join(" + ")));
    }
    // count condition per nonidentity element:
    // Σ w·y − (λ−μ)·x_{atom(g)} = μ
    for gi in 1..v {
        let mut terms: Vec<String> = Vec::new();
        for (&(a, b), counts) in &w {
            if let Some(&weight) = counts.get(&gi) {
                let var = if a == b {
                    format!("x_{a}")
                } else {
                    format!("y_{a}_{b}")
                };
                terms.push(format!("{weight} {var}"));
            }
        }
        let ax = atom_of[gi];
        let shift = params.lambda - params.mu;
        if ax != usize::MAX && shift != 0 {
            terms.push(format!("{} x_{ax}", -shift));
        }
        if terms.is_empty() {
            if params.mu != 0 && ax == usize::MAX {
                // an element with no representation at all: only μ = 0 works
                out.push_str(&format!(" cnt_{gi}: 0 x_0 = {}\n", params.mu));
            }
            continue;
        }
        let rhs = params.mu;
        let joined = terms.join(" + ").replace("+ -", "- ");
        out.push_str(&format!(" cnt_{gi}: {joined} = {rhs}\n"));
    }
    for &(a, b) in &pair_keys {
        out.push_str(&format!(" link1_{a}_{b}: y_{a}_{b} - x_{a} <= 0\n"));
        out.push_str(&format!(" link2_{a}_{b}: y_{a}_{b} - x_{b} <= 0\n"));
        out.push_str(&format!(" link3_{a}_{b}: y_{a}_{b} - x_{a} - x_{b} >= -1\n"));
    }
    out.push_str("Binary\n");
    for i in 0..n {
        out.push_str(&format!(" x_{i}\n"));
    }
    for &(a, b) in &pair_keys {
        out.push_str(&format!(" y_{a}_{b}\n"));
    }
    out.push_str("End\n");
    Ok(out)
}
