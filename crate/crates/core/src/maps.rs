//! The maps π (simple-minded collections to simple-minded systems), Θ (to
//! `w`-sincere collections) and φ (noncrossing partitions to simple-minded
//! collections), and drivers that check they are bijections.

use std::collections::{BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::collections::{self, is_exceptionally_orderable, is_inf_orthogonal, Collection, Context};
use crate::error::{Error, Result};
use crate::hom::{DerivedObject, HomEngine, RootId};
use crate::orbit::OrbitCategory;
use crate::perp;
use crate::report::VerificationReport;
use crate::weyl::{NcTuple, WeylGroup};

/// Number of randomized T-reduced expressions tried per tuple when checking
/// that φ does not depend on the choice.
pub const PHI_RESAMPLES: usize = 3;

/// Objectwise projection to `C_{-w}`.
pub fn pi_map(cat: &OrbitCategory<'_>, s: &Collection) -> Result<Collection> {
    let mut out = Vec::with_capacity(s.len());
    for &x in s.objects() {
        out.push(cat.object(x)?.rep);
    }
    Ok(Collection::orbit(out, cat.w()))
}

/// `S ∩ X ∩ Σ^w Y`: the members in degrees `0..w`.
pub fn theta(cat: &OrbitCategory<'_>, s: &Collection) -> Result<Collection> {
    let e = cat.engine();
    if !s.objects().iter().all(|&x| cat.contains(x)) || !collections::is_smc(e, s.objects()) {
        return Err(Error::Precondition(format!(
            "{} is not a simple-minded collection in the fundamental domain",
            s.display(e)
        )));
    }
    let w = i64::from(cat.w());
    Ok(Collection::derived(s.objects().iter().copied().filter(|x| x.degree < w).collect()))
}

/// The supports of the underlying modules cover every vertex.
pub fn is_w_sincere(e: &HomEngine, s: &Collection, w: u32) -> Result<bool> {
    let w = i64::from(w);
    if let Some(x) = s.objects().iter().find(|x| !(0..w).contains(&x.degree)) {
        return Err(Error::Precondition(format!("{} has degree outside 0..{w}", e.display(*x))));
    }
    let covered: BTreeSet<usize> = s.objects().iter().flat_map(|x| e.root(x.root).support()).collect();
    Ok(covered.len() == e.rank())
}

/// Maps reflections of `g` to the indecomposables with the same root.
pub struct PhiMap<'a> {
    engine: &'a HomEngine,
    group: &'a WeylGroup,
    modules: Vec<RootId>,
}

impl<'a> PhiMap<'a> {
    pub fn new(engine: &'a HomEngine, group: &'a WeylGroup) -> Result<Self> {
        if engine.quiver() != group.quiver() {
            return Err(Error::Precondition("engine and Weyl group built from different quivers".into()));
        }
        let modules = group.reflections().iter().map(|r| engine.root_id(&r.root)).collect::<Result<_>>()?;
        Ok(Self { engine, group, modules })
    }

    /// φ using the first T-reduced expression of each part.
    pub fn phi(&self, t: &NcTuple, w: u32) -> Result<Collection> {
        self.phi_by(t, w, |u| self.group.t_reduced_expression(u))
    }

    /// φ with T-reduced expressions drawn at random.
    pub fn phi_random(&self, t: &NcTuple, w: u32, rng: &mut impl Rng) -> Result<Collection> {
        self.phi_by(t, w, |u| self.group.t_reduced_random(u, rng))
    }

    fn phi_by(
        &self,
        t: &NcTuple,
        w: u32,
        mut expression: impl FnMut(&crate::weyl::WeylElement) -> Vec<usize>,
    ) -> Result<Collection> {
        if t.parts.len() != w as usize + 1 {
            return Err(Error::Precondition(format!("tuple has {} parts, expected {}", t.parts.len(), w + 1)));
        }
        let mut out = Vec::new();
        for (i, u) in t.parts.iter().enumerate() {
            let word = expression(u);
            if word.len() != t.lengths[i] {
                return Err(Error::Convention(format!("part {} has length {} but a {}-letter expression", i + 1, t.lengths[i], word.len())));
            }
            let gens: Vec<RootId> = word.iter().map(|&r| self.modules[r]).collect();
            let simples = perp::wide_simples(self.engine, &gens, gens.len())?;
            let degree = i64::from(w) - i as i64;
            out.extend(simples.into_iter().map(|r| DerivedObject::new(r, degree)));
        }
        Ok(Collection::derived(out))
    }
}

fn label(e: &HomEngine) -> String {
    e.quiver().type_label()
}

/// π sends the simple-minded collections in the fundamental domain
/// bijectively onto the `w`-simple-minded systems.
pub fn verify_theorem_a(e: &HomEngine, w: u32, budget: u64) -> Result<VerificationReport> {
    let cat = OrbitCategory::new(e, w)?;
    let smc = collections::enumerate_smc_in_fd(&cat, budget)?;
    let sms = collections::enumerate_sms(&cat, budget)?;
    let mut images = smc.iter().map(|s| pi_map(&cat, s)).collect::<Result<Vec<_>>>()?;
    images.sort();
    let distinct = images.windows(2).all(|p| p[0] != p[1]);

    let mut r = VerificationReport::new(label(e), w, "A");
    r.count("smc", smc.len()).count("sms", sms.len()).count("image", images.len());
    r.require(distinct, || "π is not injective".into());
    if let Some(s) = images.iter().find(|s| sms.binary_search(s).is_err()) {
        r.fail(format!("π image {} is not a simple-minded system", s.display(e)));
    }
    if let Some(s) = sms.iter().find(|s| images.binary_search(s).is_err()) {
        r.fail(format!("simple-minded system {} has no preimage", s.display(e)));
    }
    let n = e.rank();
    if let Some(s) = smc.iter().chain(&sms).find(|s| s.len() != n) {
        r.fail(format!("{} does not have {n} objects", s.display(e)));
    }
    if let Some(s) = smc.iter().find(|s| !collections::is_smc_oracle(e, s.objects())) {
        r.fail(format!("{} fails the exceptional-sequence oracle", s.display(e)));
    }
    Ok(r)
}

/// φ restricted to positive noncrossing partitions is a bijection onto the
/// simple-minded collections in the fundamental domain.
pub fn verify_theorem_b(e: &HomEngine, w: u32, budget: u64, seed: u64) -> Result<VerificationReport> {
    let cat = OrbitCategory::new(e, w)?;
    let group = WeylGroup::new(e.quiver())?;
    let map = PhiMap::new(e, &group)?;
    let smc = collections::enumerate_smc_in_fd(&cat, budget)?;
    let nc = group.enumerate_nc(w)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut r = VerificationReport::new(label(e), w, "B");
    let mut images = Vec::new();
    let mut positive = 0;
    let mut nonpositive = 0;
    let mut nonpositive_outside = 0;
    let mut theta_insincere = 0;
    for t in &nc {
        let image = map.phi(t, w)?;
        for _ in 0..PHI_RESAMPLES {
            let again = map.phi_random(t, w, &mut rng)?;
            r.require(again == image, || format!("φ depends on the T-reduced expression at {t:?}"));
        }
        let in_domain = image.objects().iter().all(|&x| cat.contains(x));
        if group.is_positive(t) {
            positive += 1;
            r.require(in_domain && collections::is_smc(e, image.objects()), || {
                format!("φ of a positive tuple gives {}, not a simple-minded collection in the domain", image.display(e))
            });
            images.push(image);
        } else {
            nonpositive += 1;
            let sincere_slice = in_domain && theta(&cat, &image).and_then(|s| is_w_sincere(e, &s, w)).unwrap_or(false);
            if !sincere_slice {
                theta_insincere += 1;
            }
            if !in_domain || !sincere_slice {
                nonpositive_outside += 1;
            } else {
                r.fail(format!("φ of the non-positive tuple {t:?} lands in the domain with sincere slice"));
            }
        }
    }
    images.sort();
    let distinct = images.windows(2).all(|p| p[0] != p[1]);
    r.count("nc", nc.len())
        .count("nc_positive", positive)
        .count("nc_nonpositive", nonpositive)
        .count("nonpositive_outside", nonpositive_outside)
        .count("nonpositive_insincere", theta_insincere)
        .count("smc", smc.len())
        .count("image", images.len());
    r.require(distinct, || "φ is not injective on positive tuples".into());
    r.require(images == smc, || {
        match smc.iter().find(|s| images.binary_search(s).is_err()) {
            Some(s) => format!("{} is not hit by φ", s.display(e)),
            None => "φ hits a collection outside the enumerated set".into(),
        }
    });
    Ok(r)
}

/// Exceptionally orderable, `w`-sincere ∞-orthogonal collections in degrees
/// `0..w`, found by exhaustive search independent of any simple-minded
/// collection.
pub fn enumerate_sincere(e: &HomEngine, w: u32, budget: u64) -> Result<Vec<Collection>> {
    if w == 0 {
        return Err(Error::InvalidW);
    }
    let pool: Vec<DerivedObject> =
        e.root_ids().flat_map(|r| (0..i64::from(w)).map(move |d| DerivedObject::new(r, d))).collect();
    let n = e.rank();
    collections::enumerate_inf_orthogonal(e, &pool, budget, |s| {
        let covered: BTreeSet<usize> = s.iter().flat_map(|x| e.root(x.root).support()).collect();
        covered.len() == n && is_exceptionally_orderable(e, s)
    })
}

/// Θ is a bijection from the simple-minded collections in the fundamental
/// domain onto the exceptionally orderable `w`-sincere collections.
pub fn verify_theta(e: &HomEngine, w: u32, budget: u64) -> Result<VerificationReport> {
    let cat = OrbitCategory::new(e, w)?;
    let smc = collections::enumerate_smc_in_fd(&cat, budget)?;
    let targets = enumerate_sincere(e, w, budget)?;
    let mut images = Vec::with_capacity(smc.len());
    let mut r = VerificationReport::new(label(e), w, "Theta");
    for s in &smc {
        let t = theta(&cat, s)?;
        r.require(is_w_sincere(e, &t, w)?, || format!("Θ{} is not w-sincere", s.display(e)));
        r.require(is_inf_orthogonal(e, t.objects()), || format!("Θ{} is not ∞-orthogonal", s.display(e)));
        images.push(t);
    }
    let mut preimage: HashMap<&Collection, &Collection> = HashMap::new();
    for (s, t) in smc.iter().zip(&images) {
        if let Some(prev) = preimage.insert(t, s) {
            r.fail(format!("Θ identifies {} and {}", prev.display(e), s.display(e)));
        }
    }
    images.sort();
    r.count("smc", smc.len()).count("image", images.len()).count("sincere", targets.len());
    r.require(images == targets, || {
        match targets.iter().find(|t| images.binary_search(t).is_err()) {
            Some(t) => format!("{} is not in the image of Θ", t.display(e)),
            None => "Θ leaves the target class".into(),
        }
    });
    debug_assert!(images.iter().all(|c| c.context() == Context::Derived));
    Ok(r)
}
