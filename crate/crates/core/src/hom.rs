//! Hom dimensions in `D^b(kQ)` for Dynkin `Q`, computed on dimension vectors.
//!
//! Every indecomposable of `D^b(kQ)` is `Σᵃ M` for an indecomposable module
//! `M`, named by its dimension vector (a positive root). Module Hom
//! dimensions come from the Euler form together with AR duality
//! `dim Ext¹(M, N) = dim Hom(N, τM)`, unrolled until the first argument is
//! projective, where `dim Hom(P_i, N) = N_i`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::quiver::{DimVector, Quiver};

/// Index of a positive root in [`HomEngine::roots`] (lexicographic order).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootId(pub usize);

/// `Σ^degree M_root`. Ordering is by root, then degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DerivedObject {
    pub root: RootId,
    pub degree: i64,
}

impl DerivedObject {
    pub fn new(root: RootId, degree: i64) -> Self {
        Self { root, degree }
    }

    pub fn shift(self, k: i64) -> Self {
        Self { root: self.root, degree: self.degree + k }
    }

    /// The module in degree zero with the same root, i.e. `H(x)` up to shift.
    pub fn module(self) -> Self {
        Self { root: self.root, degree: 0 }
    }
}

/// Precomputed Hom tables for a Dynkin quiver. Immutable after construction.
#[derive(Clone, Debug)]
pub struct HomEngine {
    quiver: Quiver,
    roots: Vec<DimVector>,
    index: HashMap<DimVector, RootId>,
    projective: Vec<Option<usize>>,
    injective: Vec<Option<usize>>,
    projectives: Vec<RootId>,
    injectives: Vec<RootId>,
    tau: Vec<Option<RootId>>,
    tau_inv: Vec<Option<RootId>>,
    hom: Vec<u32>,
    coxeter_number: usize,
}

impl HomEngine {
    pub fn new(quiver: &Quiver) -> Result<Self> {
        quiver.require_dynkin()?;
        let n = quiver.num_vertices();
        let roots = quiver.positive_roots()?;
        let index: HashMap<DimVector, RootId> =
            roots.iter().enumerate().map(|(i, r)| (r.clone(), RootId(i))).collect();
        let lookup = |v: &DimVector| -> Result<RootId> {
            index.get(v).copied().ok_or_else(|| Error::Convention(format!("{v} is not a root")))
        };
        let mut projective = vec![None; roots.len()];
        let mut injective = vec![None; roots.len()];
        let mut projectives = Vec::with_capacity(n);
        let mut injectives = Vec::with_capacity(n);
        for i in 0..n {
            let p = lookup(&quiver.projective_dim(i))?;
            let q = lookup(&quiver.injective_dim(i))?;
            projective[p.0] = Some(i);
            injective[q.0] = Some(i);
            projectives.push(p);
            injectives.push(q);
        }
        let phi = quiver.coxeter_matrix();
        let phi_inv = quiver.inverse_coxeter_matrix();
        let mut tau = vec![None; roots.len()];
        let mut tau_inv = vec![None; roots.len()];
        for (i, r) in roots.iter().enumerate() {
            if projective[i].is_none() {
                tau[i] = Some(lookup(&DimVector(phi.mul_vec(&r.0)))?);
            }
            if injective[i].is_none() {
                tau_inv[i] = Some(lookup(&DimVector(phi_inv.mul_vec(&r.0)))?);
            }
        }
        let coxeter_number = quiver.coxeter_number()?;
        let mut engine = HomEngine {
            quiver: quiver.clone(),
            roots,
            index,
            projective,
            injective,
            projectives,
            injectives,
            tau,
            tau_inv,
            hom: Vec::new(),
            coxeter_number,
        };
        let m = engine.roots.len();
        let euler = quiver.euler_matrix();
        let mut table = vec![0u32; m * m];
        for a in 0..m {
            for b in 0..m {
                table[a * m + b] = engine.unroll_hom(&euler, RootId(a), RootId(b))?;
            }
        }
        engine.hom = table;
        engine.check_exceptional_order()?;
        Ok(engine)
    }

    /// Computes `dim Hom(M_a, M_b)` by unrolling
    /// `Hom(x, y) = ⟨x, y⟩ + Hom(y, τx)` until `x` is projective.
    fn unroll_hom(&self, euler: &IntMatrix, a: RootId, b: RootId) -> Result<u32> {
        let limit = 10 * self.quiver.num_vertices().max(1) * self.coxeter_number;
        let (mut x, mut y) = (a, b);
        let mut terms = Vec::new();
        loop {
            if let Some(i) = self.projective[x.0] {
                terms.push(self.roots[y.0].0[i]);
                break;
            }
            terms.push(euler.bilinear(&self.roots[x.0].0, &self.roots[y.0].0));
            let tx = self.tau[x.0].expect("non-projective root has a τ-image");
            (x, y) = (y, tx);
            if terms.len() > limit {
                return Err(Error::Convention(format!("τ-recursion exceeded depth {limit}")));
            }
        }
        // Each suffix sum is the Hom dimension of an intermediate pair.
        let mut acc = 0i64;
        for t in terms.iter().rev() {
            acc += t;
            if acc < 0 {
                return Err(Error::Convention("negative intermediate Hom dimension".into()));
            }
        }
        Ok(acc as u32)
    }

    fn check_exceptional_order(&self) -> Result<()> {
        let order = self.quiver.exceptional_vertex_order()?;
        let simples: Vec<RootId> = order
            .iter()
            .map(|&v| self.root_id(&DimVector::unit(self.quiver.num_vertices(), v)))
            .collect::<Result<_>>()?;
        for j in 0..simples.len() {
            for k in 0..j {
                if self.dim_hom_mod(simples[j], simples[k]) != 0 || self.dim_ext_mod(simples[j], simples[k]) != 0 {
                    return Err(Error::Convention("simples in topological order are not exceptional".into()));
                }
            }
        }
        Ok(())
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn rank(&self) -> usize {
        self.quiver.num_vertices()
    }

    pub fn roots(&self) -> &[DimVector] {
        &self.roots
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root_ids(&self) -> impl Iterator<Item = RootId> {
        (0..self.roots.len()).map(RootId)
    }

    pub fn root(&self, id: RootId) -> &DimVector {
        &self.roots[id.0]
    }

    pub fn coxeter_number(&self) -> usize {
        self.coxeter_number
    }

    /// Looks up a dimension vector, rejecting zero vectors and non-roots.
    pub fn root_id(&self, v: &DimVector) -> Result<RootId> {
        if v.len() != self.rank() || v.is_zero() {
            return Err(Error::NotARoot(v.to_string()));
        }
        self.index.get(v).copied().ok_or_else(|| Error::NotARoot(v.to_string()))
    }

    pub fn simple(&self, vertex: usize) -> RootId {
        self.index[&DimVector::unit(self.rank(), vertex)]
    }

    pub fn projective(&self, vertex: usize) -> RootId {
        self.projectives[vertex]
    }

    pub fn injective(&self, vertex: usize) -> RootId {
        self.injectives[vertex]
    }

    pub fn is_projective(&self, r: RootId) -> bool {
        self.projective[r.0].is_some()
    }

    pub fn is_injective(&self, r: RootId) -> bool {
        self.injective[r.0].is_some()
    }

    /// AR translate on modules; `None` for projectives.
    pub fn tau_mod(&self, r: RootId) -> Option<RootId> {
        self.tau[r.0]
    }

    pub fn tau_inv_mod(&self, r: RootId) -> Option<RootId> {
        self.tau_inv[r.0]
    }

    pub fn dim_hom_mod(&self, m: RootId, n: RootId) -> u32 {
        self.hom[m.0 * self.roots.len() + n.0]
    }

    pub fn dim_ext_mod(&self, m: RootId, n: RootId) -> u32 {
        match self.tau[m.0] {
            Some(tm) => self.dim_hom_mod(n, tm),
            None => 0,
        }
    }

    /// `dim Hom_D(x, y)`: nonzero only when `y` sits in the same degree as
    /// `x` or one above.
    pub fn dim_hom(&self, x: DerivedObject, y: DerivedObject) -> u32 {
        match y.degree - x.degree {
            0 => self.dim_hom_mod(x.root, y.root),
            1 => self.dim_ext_mod(x.root, y.root),
            _ => 0,
        }
    }

    /// Derived AR translate: `τ` on non-projectives, `P_i ↦ Σ⁻¹ I_i`.
    pub fn tau(&self, x: DerivedObject) -> DerivedObject {
        match (self.tau[x.root.0], self.projective[x.root.0]) {
            (Some(t), _) => DerivedObject::new(t, x.degree),
            (None, Some(i)) => DerivedObject::new(self.injectives[i], x.degree - 1),
            (None, None) => unreachable!("root is neither projective nor has a τ-image"),
        }
    }

    pub fn tau_inv(&self, x: DerivedObject) -> DerivedObject {
        match (self.tau_inv[x.root.0], self.injective[x.root.0]) {
            (Some(t), _) => DerivedObject::new(t, x.degree),
            (None, Some(i)) => DerivedObject::new(self.projectives[i], x.degree + 1),
            (None, None) => unreachable!("root is neither injective nor has a τ⁻¹-image"),
        }
    }

    /// Serre functor `𝕊 = Σ τ`.
    pub fn serre(&self, x: DerivedObject) -> DerivedObject {
        self.tau(x).shift(1)
    }

    pub fn serre_inv(&self, x: DerivedObject) -> DerivedObject {
        self.tau_inv(x.shift(-1))
    }

    /// `(Σ^w 𝕊)^k x` for any integer `k`.
    pub fn f_power(&self, x: DerivedObject, w: u32, k: i64) -> DerivedObject {
        let w = i64::from(w);
        let mut y = x;
        if k >= 0 {
            for _ in 0..k {
                y = self.serre(y).shift(w);
            }
        } else {
            for _ in 0..-k {
                y = self.serre_inv(y.shift(-w));
            }
        }
        y
    }

    /// Parses `(d1,...,dn)@deg`.
    pub fn parse_object(&self, text: &str) -> Result<DerivedObject> {
        let (root, degree) = parse_object_literal(text)?;
        Ok(DerivedObject::new(self.root_id(&root)?, degree))
    }

    pub fn display(&self, x: DerivedObject) -> ObjectDisplay<'_> {
        ObjectDisplay { engine: self, x }
    }

    pub fn format_object(&self, x: DerivedObject) -> String {
        self.display(x).to_string()
    }
}

/// Parses the object literal syntax `(d1,...,dn)@deg` without reference to a
/// quiver.
pub fn parse_object_literal(text: &str) -> Result<(DimVector, i64)> {
    let t = text.trim();
    let at = t.rfind('@').ok_or_else(|| Error::Syntax { pos: t.len(), msg: "expected '@degree'".into() })?;
    let root = DimVector::parse(&t[..at])?;
    let degree = t[at + 1..].trim().parse::<i64>().map_err(|_| Error::Syntax {
        pos: at + 1,
        msg: format!("invalid degree {:?}", &t[at + 1..]),
    })?;
    Ok((root, degree))
}

pub struct ObjectDisplay<'a> {
    engine: &'a HomEngine,
    x: DerivedObject,
}

impl fmt::Display for ObjectDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.engine.root(self.x.root), self.x.degree)
    }
}
