//! Closed-form Hom dimensions for the Kronecker quiver `1 ⇉ 2` and a check of
//! a family of `1`-Riedtmann configurations in `C_{-1}` built from quasi-simple
//! regular modules.
//!
//! Only `1`-orthogonality, negative controls and Riedtmann vanishing on a
//! finite sample are certified. The failure of functorial finiteness involves
//! infinitely many indecomposables and is not checked.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::report::VerificationReport;

/// Indecomposable Kronecker modules. Tubes are opaque labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum KronClass {
    /// Dimension vector `(k, k+1)`; `k = 0, 1` are the projectives `P_2, P_1`.
    Preprojective(u32),
    /// Dimension vector `(k+1, k)`; `k = 0, 1` are the injectives `I_1, I_2`.
    Preinjective(u32),
    /// Dimension vector `(ℓ, ℓ)` in a homogeneous tube.
    Regular { tube: u32, length: u32 },
}

impl KronClass {
    pub fn dim(self) -> [i64; 2] {
        match self {
            KronClass::Preprojective(k) => [i64::from(k), i64::from(k) + 1],
            KronClass::Preinjective(k) => [i64::from(k) + 1, i64::from(k)],
            KronClass::Regular { length, .. } => [i64::from(length); 2],
        }
    }

    /// AR translate on modules; `None` for projectives.
    pub fn tau(self) -> Option<KronClass> {
        match self {
            KronClass::Preprojective(k) => k.checked_sub(2).map(KronClass::Preprojective),
            KronClass::Preinjective(k) => Some(KronClass::Preinjective(k + 2)),
            r @ KronClass::Regular { .. } => Some(r),
        }
    }

    /// Inverse AR translate on modules; `None` for injectives.
    pub fn tau_inv(self) -> Option<KronClass> {
        match self {
            KronClass::Preprojective(k) => Some(KronClass::Preprojective(k + 2)),
            KronClass::Preinjective(k) => k.checked_sub(2).map(KronClass::Preinjective),
            r @ KronClass::Regular { .. } => Some(r),
        }
    }
}

impl fmt::Display for KronClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KronClass::Preprojective(k) => write!(f, "P{k}"),
            KronClass::Preinjective(k) => write!(f, "I{k}"),
            KronClass::Regular { tube, length } => write!(f, "R{tube}[{length}]"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KronObject {
    pub class: KronClass,
    pub degree: i64,
}

impl KronObject {
    pub fn new(class: KronClass, degree: i64) -> Self {
        Self { class, degree }
    }

    pub fn shift(self, k: i64) -> Self {
        Self { degree: self.degree + k, ..self }
    }
}

impl fmt::Display for KronObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.class, self.degree)
    }
}

pub fn euler_matrix() -> IntMatrix {
    IntMatrix::from_rows(&[vec![1, -2], vec![0, 1]])
}

pub fn euler_form(x: KronClass, y: KronClass) -> i64 {
    euler_matrix().bilinear(&x.dim(), &y.dim())
}

/// `dim Hom(M, N)` between indecomposable modules.
pub fn hom_mod(m: KronClass, n: KronClass) -> u32 {
    use KronClass::*;
    match (m, n) {
        (Regular { .. } | Preinjective(_), Preprojective(_)) | (Preinjective(_), Regular { .. }) => 0,
        (Regular { tube: a, length: l }, Regular { tube: b, length: k }) => {
            if a == b {
                l.min(k)
            } else {
                0
            }
        }
        // Ext¹(M, N) = D Hom(N, τM) vanishes here, so Hom is the Euler form.
        (Regular { .. }, Preinjective(_)) => euler_u32(m, n),
        // Hom = ⟨M, N⟩ + D Hom(N, τM).
        (Preprojective(_), _) => {
            let ext = m.tau().map_or(0, |t| hom_mod(n, t));
            u32::try_from(euler_form(m, n) + i64::from(ext)).expect("negative Hom dimension")
        }
        // Hom = ⟨M, N⟩ + D Hom(τ⁻N, M).
        (Preinjective(_), Preinjective(_)) => {
            let ext = n.tau_inv().map_or(0, |t| hom_mod(t, m));
            u32::try_from(euler_form(m, n) + i64::from(ext)).expect("negative Hom dimension")
        }
    }
}

fn euler_u32(m: KronClass, n: KronClass) -> u32 {
    u32::try_from(euler_form(m, n)).expect("negative Euler form where Ext vanishes")
}

/// `dim Ext¹(M, N) = dim Hom(N, τM)`.
pub fn ext_mod(m: KronClass, n: KronClass) -> u32 {
    m.tau().map_or(0, |t| hom_mod(n, t))
}

/// Hom in `D^b`; only degree differences 0 and 1 contribute.
pub fn kron_dim_hom(x: KronObject, y: KronObject) -> u32 {
    match y.degree - x.degree {
        0 => hom_mod(x.class, y.class),
        1 => ext_mod(x.class, y.class),
        _ => 0,
    }
}

/// Derived AR translate: `τ P_i = Σ⁻¹ I_i`.
pub fn tau(x: KronObject) -> KronObject {
    match x.class.tau() {
        Some(c) => KronObject::new(c, x.degree),
        None => {
            let KronClass::Preprojective(k) = x.class else { unreachable!() };
            // P_2 = P0 ↦ I_2 = I1, P_1 = P1 ↦ I_1 = I0.
            KronObject::new(KronClass::Preinjective(1 - k), x.degree - 1)
        }
    }
}

pub fn tau_inv(x: KronObject) -> KronObject {
    match x.class.tau_inv() {
        Some(c) => KronObject::new(c, x.degree),
        None => {
            let KronClass::Preinjective(k) = x.class else { unreachable!() };
            KronObject::new(KronClass::Preprojective(1 - k), x.degree + 1)
        }
    }
}

pub fn serre(x: KronObject) -> KronObject {
    tau(x).shift(1)
}

/// `F^k x` for `F = Σ^w 𝕊`.
pub fn f_power(x: KronObject, w: u32, k: i64) -> KronObject {
    let mut y = x;
    for _ in 0..k.abs() {
        y = if k > 0 {
            serre(y).shift(i64::from(w))
        } else {
            tau_inv(y.shift(-i64::from(w) - 1))
        };
    }
    y
}

/// `dim Hom_{C_{-w}}(x, y) = Σ_{|k| ≤ window} dim Hom_D(x, F^k y)`.
pub fn orbit_dim_hom(x: KronObject, y: KronObject, w: u32, window: u32) -> u32 {
    (-i64::from(window)..=i64::from(window)).map(|k| kron_dim_hom(x, f_power(y, w, k))).sum()
}

/// `{S_λ | λ ∈ Λ} ∪ {Σ S_ω | ω ∈ Ω}`.
pub fn example_collection(lambda: &[u32], omega: &[u32]) -> Vec<KronObject> {
    let reg = |tube| KronClass::Regular { tube, length: 1 };
    lambda
        .iter()
        .map(|&t| KronObject::new(reg(t), 0))
        .chain(omega.iter().map(|&t| KronObject::new(reg(t), 1)))
        .collect()
}

/// First pair of `s` violating `Hom_C(x, y) = δ_{xy}`.
pub fn orthogonality_violation(s: &[KronObject], window: u32) -> Option<(KronObject, KronObject, u32)> {
    for (i, &x) in s.iter().enumerate() {
        for (j, &y) in s.iter().enumerate() {
            let d = orbit_dim_hom(x, y, 1, window);
            if d != u32::from(i == j) {
                return Some((x, y, d));
            }
        }
    }
    None
}

/// Test objects of `C_{-1}` covering degrees 0 and 1: preprojectives and
/// preinjectives up to index `bound`, regular modules of length ≤ 2 in the
/// given tubes.
pub fn sample(tubes: &[u32], bound: u32) -> Vec<KronObject> {
    let mut classes = Vec::new();
    for k in 0..=bound {
        classes.push(KronClass::Preprojective(k));
        classes.push(KronClass::Preinjective(k));
    }
    for &tube in tubes {
        for length in 1..=2 {
            classes.push(KronClass::Regular { tube, length });
        }
    }
    classes.into_iter().flat_map(|c| [KronObject::new(c, 0), KronObject::new(c, 1)]).collect()
}

/// A sampled object `z` with `Hom_C(S, z) = 0` or `Hom_C(z, S) = 0`, if any.
/// The tube set of the model is exactly the tubes occurring in `s`.
pub fn riedtmann_violation(s: &[KronObject], tubes: &[u32], window: u32) -> Option<(KronObject, &'static str)> {
    for z in sample(tubes, window) {
        if s.iter().all(|&x| orbit_dim_hom(x, z, 1, window) == 0) {
            return Some((z, "left"));
        }
        if s.iter().all(|&x| orbit_dim_hom(z, x, 1, window) == 0) {
            return Some((z, "right"));
        }
    }
    None
}

/// Rank of the sublattice of `K_0` spanned by the classes of `s`.
pub fn k0_rank(s: &[KronObject]) -> usize {
    let dims: Vec<[i64; 2]> = s.iter().map(|x| x.class.dim()).collect();
    let nonzero = dims.iter().any(|d| d != &[0, 0]);
    let independent = dims.iter().any(|a| dims.iter().any(|b| a[0] * b[1] - a[1] * b[0] != 0));
    usize::from(nonzero) + usize::from(independent)
}

/// Checks the Kronecker example for nonempty tube samples `Λ`, `Ω` (the check
/// fails unless they are disjoint):
/// (a) `S` is `1`-orthogonal in `C_{-1}`; (b) with `Λ ∩ Ω ≠ ∅` orthogonality
/// fails, and with `Ω = ∅` the left Riedtmann vanishing fails; (c) no sampled
/// object is left or right perpendicular to `S`, and the classes of `S` span a
/// rank-one sublattice of `K_0`, so `S` is not simple-minded in `D^b`.
/// Every verdict is recomputed at twice the window.
pub fn verify_example(lambda: &[u32], omega: &[u32], window: u32) -> Result<VerificationReport> {
    if lambda.is_empty() || omega.is_empty() {
        return Err(Error::Precondition("Λ and Ω must be nonempty".into()));
    }
    if window < 4 {
        return Err(Error::Precondition("window must be at least 4".into()));
    }
    let mut tubes: Vec<u32> = lambda.iter().chain(omega).copied().collect();
    tubes.sort_unstable();
    tubes.dedup();
    let s = example_collection(lambda, omega);
    let shared = example_collection(lambda, &[lambda[0]]);
    let lambda_only = example_collection(&tubes, &[]);

    let verdicts = |win: u32| {
        (
            orthogonality_violation(&s, win),
            orthogonality_violation(&shared, win),
            riedtmann_violation(&s, &tubes, win),
            riedtmann_violation(&lambda_only, &tubes, win),
        )
    };
    let (orth, neg_shared, ried, neg_empty) = verdicts(window);
    let stable = verdicts(2 * window) == (orth, neg_shared, ried, neg_empty);

    let mut r = VerificationReport::new("Kronecker", 1, "Kronecker");
    r.count("collection", s.len())
        .count("sample", sample(&tubes, window).len())
        .count("window", window as usize)
        .count("k0_rank", k0_rank(&s));
    if let Some((x, y, d)) = orth {
        r.fail(format!("(a) dim Hom_C({x}, {y}) = {d}"));
    }
    match neg_shared {
        Some((_, _, d)) => {
            r.count("negative_shared_hom", d as usize);
        }
        None => r.fail("(b) a shared tube went undetected"),
    }
    match neg_empty {
        Some(_) => {}
        None => r.fail("(b) Ω = ∅ still passes the Riedtmann check"),
    }
    if let Some((z, side)) = ried {
        r.fail(format!("(c) {z} is {side} perpendicular to S"));
    }
    r.require(k0_rank(&s) < 2, || "(c) S spans K_0".into());
    r.require(stable, || format!("verdicts change between window {window} and {}", 2 * window));
    Ok(r)
}
