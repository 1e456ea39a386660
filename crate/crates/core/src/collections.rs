//! Orthogonal collections: ∞-orthogonal collections and simple-minded
//! collections in `D^b(kQ)`, `w`-orthogonal collections, `w`-Riedtmann
//! configurations and `w`-simple-minded systems in `C_{-w}`.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::hom::{DerivedObject, HomEngine, RootId};
use crate::orbit::OrbitCategory;

/// Default limit on the number of candidate subsets an enumeration may face.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Context {
    Derived,
    Orbit(u32),
}

/// A finite set of indecomposables, kept sorted by (root, degree).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Collection {
    objects: Vec<DerivedObject>,
    context: Context,
}

impl Collection {
    pub fn new(mut objects: Vec<DerivedObject>, context: Context) -> Self {
        objects.sort();
        objects.dedup();
        Self { objects, context }
    }

    pub fn derived(objects: Vec<DerivedObject>) -> Self {
        Self::new(objects, Context::Derived)
    }

    pub fn orbit(objects: Vec<DerivedObject>, w: u32) -> Self {
        Self::new(objects, Context::Orbit(w))
    }

    pub fn objects(&self) -> &[DerivedObject] {
        &self.objects
    }

    pub fn context(&self) -> Context {
        self.context
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn contains(&self, x: DerivedObject) -> bool {
        self.objects.binary_search(&x).is_ok()
    }

    pub fn display<'a>(&'a self, engine: &'a HomEngine) -> CollectionDisplay<'a> {
        CollectionDisplay { coll: self, engine }
    }
}

pub struct CollectionDisplay<'a> {
    coll: &'a Collection,
    engine: &'a HomEngine,
}

impl fmt::Display for CollectionDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coll.objects.iter().map(|&x| self.engine.format_object(x)).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `Hom(x, y) ≠ 0` in some shift, i.e. `Hom ⊕ Ext¹` between the underlying modules.
fn linked(e: &HomEngine, x: RootId, y: RootId) -> bool {
    e.dim_hom_mod(x, y) + e.dim_ext_mod(x, y) > 0
}

/// Pairwise part of ∞-orthogonality for a (possibly equal) pair.
fn inf_orthogonal_pair(e: &HomEngine, x: DerivedObject, y: DerivedObject) -> bool {
    if x == y {
        return e.dim_hom(x, x) == 1;
    }
    // Hom(Σᵏ x, y) for k ≥ 0 can only be nonzero when deg y - deg x - k ∈ {0, 1}.
    let gap = y.degree - x.degree;
    let both = |a: DerivedObject, b: DerivedObject, g: i64| {
        (0..=1).all(|j| g - j < 0 || e.dim_hom(a.shift(g - j), b) == 0)
    };
    both(x, y, gap) && both(y, x, -gap)
}

pub fn is_inf_orthogonal(e: &HomEngine, s: &[DerivedObject]) -> bool {
    s.iter().enumerate().all(|(i, &x)| s[i..].iter().all(|&y| inf_orthogonal_pair(e, x, y)))
}

/// No indecomposable lies in `(Σ^ℤ S)^⊥`.
fn total_perp_vanishes(e: &HomEngine, s: &[DerivedObject]) -> bool {
    e.root_ids().all(|n| s.iter().any(|x| linked(e, x.root, n)))
}

/// ∞-orthogonal and generating; generation is tested by the vanishing of the
/// total right perpendicular category.
pub fn is_smc(e: &HomEngine, s: &[DerivedObject]) -> bool {
    is_inf_orthogonal(e, s) && total_perp_vanishes(e, s)
}

/// Whether the modules underlying `s` can be ordered into an exceptional
/// sequence: the digraph `x → y` whenever `Hom(x, Σⁱ y) ≠ 0` for some `i`
/// must be acyclic.
pub fn is_exceptionally_orderable(e: &HomEngine, s: &[DerivedObject]) -> bool {
    let k = s.len();
    let mut indegree = vec![0usize; k];
    let mut edges = vec![Vec::new(); k];
    for i in 0..k {
        if e.dim_ext_mod(s[i].root, s[i].root) > 0 {
            return false;
        }
        for j in 0..k {
            if i != j && linked(e, s[i].root, s[j].root) {
                edges[i].push(j);
                indegree[j] += 1;
            }
        }
    }
    let mut stack: Vec<usize> = (0..k).filter(|&i| indegree[i] == 0).collect();
    let mut seen = 0;
    while let Some(i) = stack.pop() {
        seen += 1;
        for &j in &edges[i] {
            indegree[j] -= 1;
            if indegree[j] == 0 {
                stack.push(j);
            }
        }
    }
    seen == k
}

/// Complete exceptional sequence test: `n` objects, ∞-orthogonal, orderable.
pub fn is_smc_oracle(e: &HomEngine, s: &[DerivedObject]) -> bool {
    s.len() == e.rank() && is_inf_orthogonal(e, s) && is_exceptionally_orderable(e, s)
}

fn indices(cat: &OrbitCategory<'_>, s: &[DerivedObject]) -> Result<Vec<usize>> {
    s.iter()
        .map(|&x| {
            cat.position(x).ok_or_else(|| {
                Error::Precondition(format!("{} lies outside the fundamental domain", cat.engine().display(x)))
            })
        })
        .collect()
}

fn w_orthogonal_pair(cat: &OrbitCategory<'_>, i: usize, j: usize) -> bool {
    let base = cat.hom_at(i, j) == u32::from(i == j);
    let other = cat.hom_at(j, i) == u32::from(i == j);
    let w = i64::from(cat.w());
    base && other && (1..w).all(|k| cat.hom_at(cat.shift_at(i, k), j) == 0 && cat.hom_at(cat.shift_at(j, k), i) == 0)
}

/// `dim Hom_C(x, y) = δ_{xy}` and `Hom_C(Σᵏ x, y) = 0` for `1 ≤ k ≤ w-1`.
pub fn is_w_orthogonal(cat: &OrbitCategory<'_>, s: &[DerivedObject]) -> Result<bool> {
    let idx = indices(cat, s)?;
    Ok(w_orthogonal_idx(cat, &idx))
}

fn w_orthogonal_idx(cat: &OrbitCategory<'_>, idx: &[usize]) -> bool {
    idx.iter().enumerate().all(|(a, &i)| idx[a..].iter().all(|&j| w_orthogonal_pair(cat, i, j)))
}

/// `⋂_{0≤k<w} (Σᵏ S)^⊥ = 0`.
pub fn is_left_riedtmann(cat: &OrbitCategory<'_>, s: &[DerivedObject]) -> Result<bool> {
    let idx = indices(cat, s)?;
    Ok(left_riedtmann_idx(cat, &idx))
}

/// `⋂_{0≤k<w} ⊥(Σ^{-k} S) = 0`.
pub fn is_right_riedtmann(cat: &OrbitCategory<'_>, s: &[DerivedObject]) -> Result<bool> {
    let idx = indices(cat, s)?;
    Ok(right_riedtmann_idx(cat, &idx))
}

fn left_riedtmann_idx(cat: &OrbitCategory<'_>, idx: &[usize]) -> bool {
    let w = i64::from(cat.w());
    (0..cat.len()).all(|z| idx.iter().any(|&s| (0..w).any(|k| cat.hom_at(cat.shift_at(s, k), z) > 0)))
}

fn right_riedtmann_idx(cat: &OrbitCategory<'_>, idx: &[usize]) -> bool {
    let w = i64::from(cat.w());
    (0..cat.len()).all(|z| idx.iter().any(|&s| (0..w).any(|k| cat.hom_at(z, cat.shift_at(s, -k)) > 0)))
}

/// `w`-simple-minded system, detected as a `w`-Riedtmann configuration; in
/// Dynkin type `⟨S⟩` is automatically functorially finite.
pub fn is_sms(cat: &OrbitCategory<'_>, s: &[DerivedObject]) -> Result<bool> {
    let idx = indices(cat, s)?;
    Ok(is_sms_idx(cat, &idx))
}

fn is_sms_idx(cat: &OrbitCategory<'_>, idx: &[usize]) -> bool {
    w_orthogonal_idx(cat, idx) && left_riedtmann_idx(cat, idx) && right_riedtmann_idx(cat, idx)
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

fn check_budget(candidates: usize, size: usize, budget: u64) -> Result<()> {
    let needed = binomial(candidates, size);
    if needed > u128::from(budget) {
        return Err(Error::Budget { needed, budget });
    }
    Ok(())
}

/// Every clique of the graph `adj` (of any size) that extends `required` and
/// passes `accept`, in lexicographic order of the added vertices.
pub(crate) fn cliques(
    adj: &[BitSet],
    required: &[usize],
    accept: impl Fn(&[usize]) -> bool + Sync,
) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut cand = BitSet::new(n);
    for v in 0..n {
        if !required.contains(&v) && required.iter().all(|&r| adj[r].contains(v)) {
            cand.insert(v);
        }
    }
    let mut out = Vec::new();
    if accept(required) {
        out.push(required.to_vec());
    }
    let firsts: Vec<usize> = cand.iter_above(None).collect();
    let branches: Vec<Vec<Vec<usize>>> = firsts
        .par_iter()
        .map(|&v| {
            let mut acc = Vec::new();
            let mut current = required.to_vec();
            current.push(v);
            extend(adj, &cand.intersect(&adj[v]), v, &mut current, &accept, &mut acc);
            acc
        })
        .collect();
    out.extend(branches.into_iter().flatten());
    out
}

fn extend(
    adj: &[BitSet],
    cand: &BitSet,
    last: usize,
    current: &mut Vec<usize>,
    accept: &(impl Fn(&[usize]) -> bool + Sync),
    out: &mut Vec<Vec<usize>>,
) {
    if accept(current) {
        out.push(current.clone());
    }
    let next: Vec<usize> = cand.iter_above(Some(last)).collect();
    for v in next {
        current.push(v);
        extend(adj, &cand.intersect(&adj[v]), v, current, accept, out);
        current.pop();
    }
}

fn graph(len: usize, edge: impl Fn(usize, usize) -> bool + Sync) -> Vec<BitSet> {
    (0..len)
        .into_par_iter()
        .map(|i| {
            let mut b = BitSet::new(len);
            for j in 0..len {
                if i != j && edge(i, j) {
                    b.insert(j);
                }
            }
            b
        })
        .collect()
}

fn finish(mut found: Vec<Collection>) -> Vec<Collection> {
    found.sort();
    found
}

/// All simple-minded collections contained in the fundamental domain.
pub fn enumerate_smc_in_fd(cat: &OrbitCategory<'_>, budget: u64) -> Result<Vec<Collection>> {
    let e = cat.engine();
    enumerate_smc_among(e, cat.domain(), &[], budget)
}

/// Simple-minded collections with every object in degrees `lo..=hi` that
/// contain `required`.
pub fn enumerate_smc_in_window(
    e: &HomEngine,
    lo: i64,
    hi: i64,
    required: &[DerivedObject],
    budget: u64,
) -> Result<Vec<Collection>> {
    let pool: Vec<DerivedObject> =
        e.root_ids().flat_map(|r| (lo..=hi).map(move |d| DerivedObject::new(r, d))).collect();
    enumerate_smc_among(e, &pool, required, budget)
}

fn enumerate_smc_among(
    e: &HomEngine,
    pool: &[DerivedObject],
    required: &[DerivedObject],
    budget: u64,
) -> Result<Vec<Collection>> {
    let mut req = Vec::with_capacity(required.len());
    for x in required {
        let i = pool.iter().position(|y| y == x).ok_or_else(|| {
            Error::Precondition(format!("{} is not among the candidates", e.display(*x)))
        })?;
        req.push(i);
    }
    check_budget(pool.len() - req.len(), e.rank().saturating_sub(req.len()), budget)?;
    let adj = graph(pool.len(), |i, j| inf_orthogonal_pair(e, pool[i], pool[j]));
    if !req.iter().all(|&i| inf_orthogonal_pair(e, pool[i], pool[i])) {
        return Ok(Vec::new());
    }
    let found = cliques(&adj, &req, |c| {
        let objs: Vec<DerivedObject> = c.iter().map(|&i| pool[i]).collect();
        total_perp_vanishes(e, &objs)
    });
    Ok(finish(
        found
            .into_iter()
            .map(|c| Collection::derived(c.into_iter().map(|i| pool[i]).collect()))
            .collect(),
    ))
}

/// All `w`-simple-minded systems of `C_{-w}`.
pub fn enumerate_sms(cat: &OrbitCategory<'_>, budget: u64) -> Result<Vec<Collection>> {
    check_budget(cat.len(), cat.engine().rank(), budget)?;
    let adj = graph(cat.len(), |i, j| w_orthogonal_pair(cat, i, j));
    let diag: Vec<usize> = (0..cat.len()).filter(|&i| w_orthogonal_pair(cat, i, i)).collect();
    let found = cliques(&adj, &[], |c| {
        c.iter().all(|i| diag.binary_search(i).is_ok()) && left_riedtmann_idx(cat, c) && right_riedtmann_idx(cat, c)
    });
    let w = cat.w();
    Ok(finish(
        found
            .into_iter()
            .map(|c| Collection::orbit(c.into_iter().map(|i| cat.domain()[i]).collect(), w))
            .collect(),
    ))
}

/// ∞-orthogonal collections drawn from `pool` that pass `accept`; the pool is
/// searched exhaustively through the orthogonality graph.
pub fn enumerate_inf_orthogonal(
    e: &HomEngine,
    pool: &[DerivedObject],
    budget: u64,
    accept: impl Fn(&[DerivedObject]) -> bool + Sync,
) -> Result<Vec<Collection>> {
    check_budget(pool.len(), e.rank(), budget)?;
    let adj = graph(pool.len(), |i, j| inf_orthogonal_pair(e, pool[i], pool[j]));
    let found = cliques(&adj, &[], |c| {
        let objs: Vec<DerivedObject> = c.iter().map(|&i| pool[i]).collect();
        accept(&objs)
    });
    Ok(finish(found.into_iter().map(|c| Collection::derived(c.into_iter().map(|i| pool[i]).collect())).collect()))
}
