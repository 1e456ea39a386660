//! Perpendicular categories of exceptional collections, wide closures and the
//! reduction of simple-minded collections to a perpendicular category.

use crate::collections::{self, is_exceptionally_orderable, Collection};
use crate::error::{Error, Result};
use crate::hom::{DerivedObject, HomEngine, RootId};
use crate::quiver::Quiver;
use crate::report::VerificationReport;

/// Indecomposable modules `N` with `Hom(E, N) = 0 = Ext¹(E, N)`.
pub fn perp_indecomposables(e: &HomEngine, gens: &[RootId]) -> Vec<RootId> {
    e.root_ids()
        .filter(|&n| gens.iter().all(|&x| e.dim_hom_mod(x, n) == 0 && e.dim_ext_mod(x, n) == 0))
        .collect()
}

/// Indecomposable modules `M` with `Hom(M, E) = 0 = Ext¹(M, E)`.
pub fn left_perp_indecomposables(e: &HomEngine, gens: &[RootId]) -> Vec<RootId> {
    e.root_ids()
        .filter(|&m| gens.iter().all(|&x| e.dim_hom_mod(m, x) == 0 && e.dim_ext_mod(m, x) == 0))
        .collect()
}

/// Indecomposables of the wide closure of `gens`, as `⊥(gens^⊥)`.
pub fn wide_closure(e: &HomEngine, gens: &[RootId]) -> Vec<RootId> {
    left_perp_indecomposables(e, &perp_indecomposables(e, gens))
}

fn modules(roots: &[RootId]) -> Vec<DerivedObject> {
    roots.iter().map(|&r| DerivedObject::new(r, 0)).collect()
}

/// The simple objects of the wide subcategory spanned by the `k` objects of
/// `gens`: the unique Hom-orthogonal, exceptionally orderable `k`-subset of its
/// indecomposables.
pub fn wide_simples(e: &HomEngine, gens: &[RootId], k: usize) -> Result<Vec<RootId>> {
    if !is_exceptionally_orderable(e, &modules(gens)) {
        return Err(Error::Precondition("generators do not form an exceptional collection".into()));
    }
    simples_among(e, &wide_closure(e, gens), k)
}

fn simples_among(e: &HomEngine, pool: &[RootId], k: usize) -> Result<Vec<RootId>> {
    let mut found = Vec::new();
    let mut current = Vec::new();
    search(e, pool, 0, k, &mut current, &mut found);
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        0 => Err(Error::Convention(format!("no orthogonal exceptional {k}-subset among {} objects", pool.len()))),
        m => Err(Error::Convention(format!("{m} orthogonal exceptional {k}-subsets; expected exactly one"))),
    }
}

fn search(e: &HomEngine, pool: &[RootId], from: usize, k: usize, current: &mut Vec<RootId>, found: &mut Vec<Vec<RootId>>) {
    if current.len() == k {
        if is_exceptionally_orderable(e, &modules(current)) {
            found.push(current.clone());
        }
        return;
    }
    for i in from..pool.len() {
        let r = pool[i];
        if e.dim_hom_mod(r, r) == 1 && current.iter().all(|&c| e.dim_hom_mod(c, r) == 0 && e.dim_hom_mod(r, c) == 0) {
            current.push(r);
            search(e, pool, i + 1, k, current, found);
            current.pop();
        }
    }
}

/// `E^⊥` as a module category: its indecomposables, its simples and the quiver
/// whose arrows count `Ext¹` between those simples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerpCategory {
    pub generators: Vec<RootId>,
    pub indecomposables: Vec<RootId>,
    pub simples: Vec<RootId>,
    pub quiver: Quiver,
}

pub fn perp_category(e: &HomEngine, gens: &[RootId]) -> Result<PerpCategory> {
    if !is_exceptionally_orderable(e, &modules(gens)) {
        return Err(Error::Precondition("generators do not form an exceptional collection".into()));
    }
    let ind = perp_indecomposables(e, gens);
    let rank = e.rank().checked_sub(gens.len()).ok_or_else(|| {
        Error::Precondition("more generators than vertices".into())
    })?;
    let simples = simples_among(e, &ind, rank)?;
    let mut arrows = Vec::new();
    for (i, &a) in simples.iter().enumerate() {
        for (j, &b) in simples.iter().enumerate() {
            for _ in 0..e.dim_ext_mod(a, b) {
                arrows.push((i, j));
            }
        }
    }
    let quiver = Quiver::new(rank, arrows)?;
    if !quiver.is_dynkin() {
        return Err(Error::Convention(format!("perpendicular quiver of type {}", quiver.type_label())));
    }
    Ok(PerpCategory { generators: gens.to_vec(), indecomposables: ind, simples, quiver })
}

pub fn perp_quiver(e: &HomEngine, gens: &[RootId]) -> Result<Quiver> {
    perp_category(e, gens).map(|p| p.quiver)
}

/// Compares simple-minded collections of `D^b(kQ)` containing `t` (placed in
/// degree 0) with simple-minded collections of `(Σ^ℤ t)^⊥`, all objects in
/// degrees `0..=w+1`. The perpendicular side is counted twice: through the
/// quiver of the perpendicular category and directly inside `D^b(kQ)`.
pub fn verify_reduction(e: &HomEngine, t: &[RootId], w: u32, budget: u64) -> Result<VerificationReport> {
    if w == 0 {
        return Err(Error::InvalidW);
    }
    let hi = i64::from(w) + 1;
    let t_objs = modules(t);
    if !collections::is_inf_orthogonal(e, &t_objs) {
        return Err(Error::Precondition("T is not ∞-orthogonal".into()));
    }
    let perp = perp_category(e, t)?;
    let containing = collections::enumerate_smc_in_window(e, 0, hi, &t_objs, budget)?;

    let sub = HomEngine::new(&perp.quiver)?;
    let via_quiver = collections::enumerate_smc_in_window(&sub, 0, hi, &[], budget)?;

    let pool: Vec<DerivedObject> =
        perp.indecomposables.iter().flat_map(|&r| (0..=hi).map(move |d| DerivedObject::new(r, d))).collect();
    let direct = collections::enumerate_inf_orthogonal(e, &pool, budget, |s| {
        perp.indecomposables
            .iter()
            .all(|&n| s.iter().any(|x| e.dim_hom_mod(x.root, n) + e.dim_ext_mod(x.root, n) > 0))
    })?;

    let label = format!(
        "{} T={{{}}}",
        e.quiver().type_label(),
        t.iter().map(|&r| e.root(r).to_string()).collect::<Vec<_>>().join(",")
    );
    let mut report = VerificationReport::new(label, w, "Reduction");
    report
        .count("containing_t", containing.len())
        .count("perp_rank", perp.simples.len())
        .count("perp_via_quiver", via_quiver.len())
        .count("perp_direct", direct.len());
    report.require(perp.simples.len() + t.len() == e.rank(), || "rank law fails".into());
    report.require(via_quiver.len() == direct.len(), || {
        format!("perp counts disagree: {} via quiver, {} directly", via_quiver.len(), direct.len())
    });
    report.require(containing.len() == direct.len(), || {
        format!("{} collections contain T, {} in the perpendicular category", containing.len(), direct.len())
    });

    let mut degenerate = 0;
    for s in &containing {
        let rest: Vec<DerivedObject> = s.objects().iter().copied().filter(|x| !t_objs.contains(x)).collect();
        if rest.iter().all(|x| perp.indecomposables.contains(&x.root)) {
            degenerate += 1;
            let c = Collection::derived(rest);
            report.require(direct.binary_search(&c).is_ok(), || {
                format!("{} minus T is not simple-minded in the perpendicular category", s.display(e))
            });
        }
    }
    report.count("degenerate", degenerate);
    Ok(report)
}
