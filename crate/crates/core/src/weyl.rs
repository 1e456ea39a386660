//! The Weyl group of a Dynkin quiver as integer matrices on the root lattice
//! (simple-root basis), with absolute length and noncrossing partitions.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::quiver::{DimVector, Quiver};

/// Groups larger than this are not enumerated (E_7 and E_8 exceed it).
pub const MAX_GROUP_ORDER: usize = 1 << 20;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeylElement(pub IntMatrix);

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement(IntMatrix::identity(n))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        WeylElement(&self.0 * &other.0)
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.0.mul_vec(v)
    }

    pub fn is_identity(&self) -> bool {
        self.0 == IntMatrix::identity(self.0.size())
    }

    /// Inverse as the last nontrivial power; the group is finite.
    pub fn inverse(&self) -> WeylElement {
        let mut prev = WeylElement::identity(self.0.size());
        let mut cur = self.clone();
        while !cur.is_identity() {
            prev = cur.clone();
            cur = cur.mul(self);
        }
        prev
    }

    pub fn order(&self) -> usize {
        let mut cur = self.clone();
        let mut k = 1;
        while !cur.is_identity() {
            cur = cur.mul(self);
            k += 1;
        }
        k
    }

    /// Absolute length as the codimension of the fixed space.
    pub fn abs_length(&self) -> usize {
        self.0.sub(&IntMatrix::identity(self.0.size())).rank()
    }

    pub fn preserves_form(&self, form: &IntMatrix) -> bool {
        &(&self.0.transpose() * form) * &self.0 == *form
    }

    /// Simple indices `i` with `u(α_i) < 0` (right descents).
    pub fn descents(&self) -> Vec<usize> {
        (0..self.0.size()).filter(|&i| self.0.column(i).iter().any(|&x| x < 0)).collect()
    }

    /// A reduced word in simple reflections (0-based letters), stripping the
    /// smallest descent first.
    pub fn reduced_word(&self, simple: &[WeylElement]) -> Vec<usize> {
        self.reduced_word_with(simple, |d| d[0])
    }

    /// Reduced word with a caller-chosen descent at each step.
    pub fn reduced_word_with(&self, simple: &[WeylElement], mut pick: impl FnMut(&[usize]) -> usize) -> Vec<usize> {
        let mut u = self.clone();
        let mut word = Vec::new();
        while !u.is_identity() {
            let d = u.descents();
            let i = pick(&d);
            u = u.mul(&simple[i]);
            word.push(i);
        }
        word.reverse();
        word
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W{}", self.0)
    }
}

/// A reflection `t_α` together with its positive root `α`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Reflection {
    pub elem: WeylElement,
    pub root: DimVector,
}

/// `t_α(y) = y - (y, α) α` for a real root `(α, α) = 2`.
pub fn reflection(form: &IntMatrix, alpha: &DimVector) -> Result<Reflection> {
    let n = form.size();
    if alpha.len() != n {
        return Err(Error::Precondition(format!("{alpha} has the wrong length")));
    }
    let norm = form.bilinear(&alpha.0, &alpha.0);
    if norm != 2 {
        return Err(Error::Precondition(format!("({alpha}, {alpha}) = {norm}, expected 2")));
    }
    let b_alpha = form.mul_vec(&alpha.0);
    let mut m = IntMatrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] -= alpha.0[i] * b_alpha[j];
        }
    }
    Ok(Reflection { elem: WeylElement(m), root: alpha.clone() })
}

/// A `(w+1)`-tuple `(u_1, …, u_{w+1})` with `u_1 ⋯ u_{w+1} = c` and additive
/// absolute lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NcTuple {
    pub parts: Vec<WeylElement>,
    pub lengths: Vec<usize>,
}

/// Finite Weyl group of a Dynkin quiver.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    quiver: Quiver,
    form: IntMatrix,
    simple: Vec<WeylElement>,
    reflections: Vec<Reflection>,
    coxeter: WeylElement,
    elements: Vec<WeylElement>,
    lengths: HashMap<WeylElement, usize>,
}

impl WeylGroup {
    pub fn new(quiver: &Quiver) -> Result<Self> {
        if !quiver.is_dynkin() {
            return Err(Error::NotDynkin(format!("{}: infinite Weyl group", quiver.type_label())));
        }
        let n = quiver.num_vertices();
        let form = quiver.symmetric_form();
        let simple: Vec<WeylElement> = (0..n)
            .map(|i| reflection(&form, &DimVector::unit(n, i)).map(|r| r.elem))
            .collect::<Result<_>>()?;
        let reflections = quiver
            .positive_roots()?
            .iter()
            .map(|a| reflection(&form, a))
            .collect::<Result<Vec<_>>>()?;
        let coxeter = quiver
            .exceptional_vertex_order()?
            .iter()
            .fold(WeylElement::identity(n), |acc, &v| acc.mul(&simple[v]));
        let elements = enumerate_group(&simple, n)?;
        let lengths = elements.par_iter().map(|u| (u.clone(), u.abs_length())).collect();
        Ok(Self { quiver: quiver.clone(), form, simple, reflections, coxeter, elements, lengths })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn rank(&self) -> usize {
        self.quiver.num_vertices()
    }

    pub fn form(&self) -> &IntMatrix {
        &self.form
    }

    pub fn simple_reflections(&self) -> &[WeylElement] {
        &self.simple
    }

    /// All reflections, in the lexicographic order of their positive roots.
    pub fn reflections(&self) -> &[Reflection] {
        &self.reflections
    }

    pub fn coxeter_element(&self) -> &WeylElement {
        &self.coxeter
    }

    /// Elements in breadth-first order from the identity.
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.rank())
    }

    pub fn abs_length(&self, u: &WeylElement) -> usize {
        self.lengths.get(u).copied().unwrap_or_else(|| u.abs_length())
    }

    /// Vertices appearing in a reduced word; `u` lies in a proper standard
    /// parabolic subgroup iff this is not every vertex.
    pub fn support(&self, u: &WeylElement) -> BTreeSet<usize> {
        u.reduced_word(&self.simple).into_iter().collect()
    }

    pub fn support_random(&self, u: &WeylElement, rng: &mut impl Rng) -> BTreeSet<usize> {
        u.reduced_word_with(&self.simple, |d| d[rng.gen_range(0..d.len())]).into_iter().collect()
    }

    /// Reflection root index for `t`, if it is a reflection.
    pub fn reflection_index(&self, t: &WeylElement) -> Option<usize> {
        self.reflections.iter().position(|r| &r.elem == t)
    }

    /// One T-reduced expression `u = t_1 ⋯ t_k`, as reflection indices. At
    /// each step the first reflection in root order that drops the length is
    /// used.
    pub fn t_reduced_expression(&self, u: &WeylElement) -> Vec<usize> {
        self.t_reduced_with(u, |c| c[0])
    }

    /// T-reduced expression choosing among the valid first letters at random.
    pub fn t_reduced_random(&self, u: &WeylElement, rng: &mut impl Rng) -> Vec<usize> {
        self.t_reduced_with(u, |c| c[rng.gen_range(0..c.len())])
    }

    fn t_reduced_with(&self, u: &WeylElement, mut pick: impl FnMut(&[usize]) -> usize) -> Vec<usize> {
        let mut cur = u.clone();
        let mut len = self.abs_length(&cur);
        let mut word = Vec::with_capacity(len);
        while len > 0 {
            let candidates: Vec<usize> = (0..self.reflections.len())
                .filter(|&i| self.abs_length(&self.reflections[i].elem.mul(&cur)) + 1 == len)
                .collect();
            assert!(!candidates.is_empty(), "no length-reducing reflection");
            let t = pick(&candidates);
            cur = self.reflections[t].elem.mul(&cur);
            len -= 1;
            word.push(t);
        }
        word
    }

    /// Every T-reduced expression of `u`.
    pub fn all_t_reduced_expressions(&self, u: &WeylElement) -> Vec<Vec<usize>> {
        let len = self.abs_length(u);
        if len == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for (i, t) in self.reflections.iter().enumerate() {
            let rest = t.elem.mul(u);
            if self.abs_length(&rest) + 1 == len {
                for mut tail in self.all_t_reduced_expressions(&rest) {
                    tail.insert(0, i);
                    out.push(tail);
                }
            }
        }
        out
    }

    /// Elements `u` with `ℓ(u) + ℓ(u⁻¹ c) = ℓ(c)`, sorted by length then matrix.
    pub fn interval_below_coxeter(&self) -> Vec<WeylElement> {
        let n = self.abs_length(&self.coxeter);
        let mut below: Vec<WeylElement> = self
            .elements
            .par_iter()
            .filter(|u| self.abs_length(u) + self.abs_length(&u.inverse().mul(&self.coxeter)) == n)
            .cloned()
            .collect();
        below.sort_by(|a, b| self.abs_length(a).cmp(&self.abs_length(b)).then_with(|| a.cmp(b)));
        below
    }

    /// All `w`-noncrossing partitions relative to the fixed Coxeter element.
    pub fn enumerate_nc(&self, w: u32) -> Result<Vec<NcTuple>> {
        if w == 0 {
            return Err(Error::InvalidW);
        }
        let interval = self.interval_below_coxeter();
        let parts = w as usize + 1;
        let c = self.coxeter.clone();
        let out: Vec<Vec<NcTuple>> = interval
            .par_iter()
            .filter_map(|u1| {
                let rest = u1.inverse().mul(&c);
                let lr = self.abs_length(&rest);
                (self.abs_length(u1) + lr == self.abs_length(&c)).then(|| {
                    let mut acc = Vec::new();
                    let mut prefix = vec![u1.clone()];
                    self.factor(&interval, rest, parts - 1, &mut prefix, &mut acc);
                    acc
                })
            })
            .collect();
        Ok(out.into_iter().flatten().collect())
    }

    fn factor(
        &self,
        interval: &[WeylElement],
        rem: WeylElement,
        parts: usize,
        prefix: &mut Vec<WeylElement>,
        out: &mut Vec<NcTuple>,
    ) {
        if parts == 1 {
            prefix.push(rem);
            out.push(NcTuple {
                lengths: prefix.iter().map(|u| self.abs_length(u)).collect(),
                parts: prefix.clone(),
            });
            prefix.pop();
            return;
        }
        let lr = self.abs_length(&rem);
        for u in interval {
            let lu = self.abs_length(u);
            if lu > lr {
                break;
            }
            let next = u.inverse().mul(&rem);
            if lu + self.abs_length(&next) == lr {
                prefix.push(u.clone());
                self.factor(interval, next, parts - 1, prefix, out);
                prefix.pop();
            }
        }
    }

    /// Positive tuples: `u_2 ⋯ u_{w+1}` has full support.
    pub fn is_positive(&self, t: &NcTuple) -> bool {
        let tail = t.parts[1..].iter().fold(self.identity(), |acc, u| acc.mul(u));
        self.support(&tail).len() == self.rank()
    }

    pub fn filter_positive(&self, tuples: &[NcTuple]) -> Vec<NcTuple> {
        tuples.iter().filter(|t| self.is_positive(t)).cloned().collect()
    }
}

/// Breadth-first closure of the simple reflections.
pub fn enumerate_group(simple: &[WeylElement], n: usize) -> Result<Vec<WeylElement>> {
    let id = WeylElement::identity(n);
    let mut seen: HashMap<WeylElement, ()> = HashMap::new();
    let mut order = vec![id.clone()];
    seen.insert(id.clone(), ());
    let mut queue = VecDeque::from([id]);
    while let Some(u) = queue.pop_front() {
        for s in simple {
            let v = u.mul(s);
            if !seen.contains_key(&v) {
                if order.len() >= MAX_GROUP_ORDER {
                    return Err(Error::GroupTooLarge(MAX_GROUP_ORDER));
                }
                seen.insert(v.clone(), ());
                order.push(v.clone());
                queue.push_back(v);
            }
        }
    }
    Ok(order)
}
