//! Quivers, their integer bilinear forms and positive roots.
//!
//! Conventions are fixed once here and pinned by tests:
//!
//! - Euler form `⟨d, e⟩ = dᵀ E e` with `E = I - A`, where `A[i][j]` counts the
//!   arrows `i → j`. For modules this is `dim Hom - dim Ext¹`.
//! - Symmetric form `(d, e) = dᵀ (E + Eᵀ) e`.
//! - Coxeter matrix `Φ = -E⁻¹ Eᵀ` acting on column vectors; on dimension
//!   vectors of non-projective indecomposables it computes the AR translate.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// An integer vector indexed by the vertices of a quiver.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DimVector(pub Vec<i64>);

impl DimVector {
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        DimVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// Vertices (0-based) where the vector is nonzero.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| i)
    }

    /// Parses `(d1,...,dn)`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::Syntax { pos: 0, msg: "expected '(d1,...,dn)'".into() })?;
        let mut coords = Vec::new();
        let mut offset = 1;
        for piece in inner.split(',') {
            let v = piece.trim().parse::<i64>().map_err(|_| Error::Syntax {
                pos: offset,
                msg: format!("invalid integer {:?}", piece.trim()),
            })?;
            coords.push(v);
            offset += piece.len() + 1;
        }
        Ok(DimVector(coords))
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DynkinFamily {
    A,
    D,
    E,
}

/// One connected component of a Dynkin diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DynkinComponent {
    pub family: DynkinFamily,
    pub rank: usize,
    /// 0-based vertices of the component.
    pub vertices: Vec<usize>,
}

impl DynkinComponent {
    pub fn coxeter_number(&self) -> usize {
        match (self.family, self.rank) {
            (DynkinFamily::A, n) => n + 1,
            (DynkinFamily::D, n) => 2 * n - 2,
            (DynkinFamily::E, 6) => 12,
            (DynkinFamily::E, 7) => 18,
            (DynkinFamily::E, _) => 30,
        }
    }

    pub fn label(&self) -> String {
        format!("{:?}_{}", self.family, self.rank)
    }
}

/// Classification of the underlying graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QuiverKind {
    /// Every connected component is simply-laced Dynkin. The empty quiver
    /// belongs here with no components.
    Dynkin(Vec<DynkinComponent>),
    /// Two vertices joined by two parallel arrows.
    Kronecker,
    Other,
}

/// A finite acyclic quiver. Vertices are 1-based in text and 0-based in the API.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    n: usize,
    arrows: Vec<(usize, usize)>,
    labels: Option<Vec<String>>,
    kind: QuiverKind,
}

#[derive(Deserialize)]
struct QuiverJson {
    vertices: usize,
    #[serde(default)]
    arrows: Vec<[usize; 2]>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

impl Quiver {
    /// Builds a quiver from 0-based arrows, rejecting cycles and bad indices.
    pub fn new(n: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        for &(s, t) in &arrows {
            for v in [s, t] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v + 1, n });
                }
            }
        }
        let mut q = Quiver { n, arrows, labels: None, kind: QuiverKind::Other };
        q.topological_order()?;
        q.kind = q.classify();
        Ok(q)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Precondition(format!(
                "{} labels given for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Linear orientation `1 → 2 → … → n`.
    pub fn linear_a(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i)).collect()).expect("linear quiver is acyclic")
    }

    /// `D_n` with the branch point at vertex `n-2` (0-based), all arrows
    /// oriented away from vertex 0 along the long arm.
    pub fn d(n: usize) -> Self {
        assert!(n >= 4);
        let mut arrows: Vec<(usize, usize)> = (1..n - 1).map(|i| (i - 1, i)).collect();
        arrows.push((n - 3, n - 1));
        Self::new(n, arrows).expect("D quiver is acyclic")
    }

    /// `E_n` (n = 6, 7, 8): a path of `n - 1` vertices with one extra vertex
    /// hanging off the third one.
    pub fn e(n: usize) -> Self {
        assert!((6..=8).contains(&n));
        let mut arrows: Vec<(usize, usize)> = (1..n - 1).map(|i| (i - 1, i)).collect();
        arrows.push((2, n - 1));
        Self::new(n, arrows).expect("E quiver is acyclic")
    }

    pub fn kronecker() -> Self {
        Self::new(2, vec![(0, 1), (0, 1)]).expect("Kronecker quiver is acyclic")
    }

    pub fn empty() -> Self {
        Self::new(0, vec![]).expect("empty quiver")
    }

    /// Parses either grammar: JSON if the first non-blank character is `{`,
    /// otherwise `vertices <n>; arrows <s>-><t>, ...`.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_text(text)
        }
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        let raw: QuiverJson = serde_json::from_str(text).map_err(|e| Error::Syntax {
            pos: byte_offset(text, e.line(), e.column()),
            msg: e.to_string(),
        })?;
        if raw.vertices == 0 {
            return Err(Error::Syntax { pos: 0, msg: "vertex count must be positive".into() });
        }
        let mut arrows = Vec::with_capacity(raw.arrows.len());
        for [s, t] in raw.arrows {
            for v in [s, t] {
                if v == 0 || v > raw.vertices {
                    return Err(Error::VertexOutOfRange { vertex: v, n: raw.vertices });
                }
            }
            arrows.push((s - 1, t - 1));
        }
        let q = Self::new(raw.vertices, arrows)?;
        match raw.labels {
            Some(labels) => q.with_labels(labels),
            None => Ok(q),
        }
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        TextParser { src: text.as_bytes(), pos: 0 }.quiver()
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    /// Arrows as 0-based `(source, target)` pairs, with multiplicity.
    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn kind(&self) -> &QuiverKind {
        &self.kind
    }

    pub fn is_dynkin(&self) -> bool {
        matches!(self.kind, QuiverKind::Dynkin(_))
    }

    pub fn require_dynkin(&self) -> Result<()> {
        if self.is_dynkin() {
            Ok(())
        } else {
            Err(Error::NotDynkin(self.type_label()))
        }
    }

    /// Short type name, e.g. `A_3`, `A_1xA_1`, `Kronecker`.
    pub fn type_label(&self) -> String {
        match &self.kind {
            QuiverKind::Dynkin(cs) if cs.is_empty() => "empty".into(),
            QuiverKind::Dynkin(cs) => cs.iter().map(DynkinComponent::label).collect::<Vec<_>>().join("x"),
            QuiverKind::Kronecker => "Kronecker".into(),
            QuiverKind::Other => "other".into(),
        }
    }

    /// Largest Coxeter number over the components (1 for the empty quiver).
    pub fn coxeter_number(&self) -> Result<usize> {
        match &self.kind {
            QuiverKind::Dynkin(cs) => Ok(cs.iter().map(DynkinComponent::coxeter_number).max().unwrap_or(1)),
            _ => Err(Error::NotDynkin(self.type_label())),
        }
    }

    /// Canonical text form, accepted by [`Quiver::parse`].
    pub fn to_text(&self) -> String {
        let arrows: Vec<String> = self.arrows.iter().map(|(s, t)| format!("{}->{}", s + 1, t + 1)).collect();
        if arrows.is_empty() {
            format!("vertices {}; arrows", self.n)
        } else {
            format!("vertices {}; arrows {}", self.n, arrows.join(", "))
        }
    }

    pub fn adjacency(&self) -> IntMatrix {
        let mut a = IntMatrix::zeros(self.n);
        for &(s, t) in &self.arrows {
            a[(s, t)] += 1;
        }
        a
    }

    /// `E = I - A`.
    pub fn euler_matrix(&self) -> IntMatrix {
        IntMatrix::identity(self.n).sub(&self.adjacency())
    }

    pub fn euler_form(&self, d: &[i64], e: &[i64]) -> i64 {
        self.euler_matrix().bilinear(d, e)
    }

    /// `E + Eᵀ`.
    pub fn symmetric_form(&self) -> IntMatrix {
        let e = self.euler_matrix();
        e.add(&e.transpose())
    }

    /// `E⁻¹`, whose entry `(i, j)` counts paths `i → j`.
    pub fn path_counts(&self) -> IntMatrix {
        self.euler_matrix().inverse_unipotent().expect("acyclic quiver has unipotent Euler matrix")
    }

    /// `Φ = -E⁻¹ Eᵀ`.
    pub fn coxeter_matrix(&self) -> IntMatrix {
        (&self.path_counts() * &self.euler_matrix().transpose()).neg()
    }

    /// `Φ⁻¹ = -E⁻ᵀ E`.
    pub fn inverse_coxeter_matrix(&self) -> IntMatrix {
        (&self.path_counts().transpose() * &self.euler_matrix()).neg()
    }

    /// Dimension vector of the indecomposable projective `P_i`.
    pub fn projective_dim(&self, i: usize) -> DimVector {
        DimVector(self.path_counts().row(i))
    }

    /// Dimension vector of the indecomposable injective `I_i`.
    pub fn injective_dim(&self, i: usize) -> DimVector {
        DimVector(self.path_counts().column(i))
    }

    /// Positive roots as the closure of the simple roots under simple
    /// reflections, kept nonnegative. Sorted lexicographically.
    pub fn positive_roots(&self) -> Result<Vec<DimVector>> {
        self.require_dynkin()?;
        let b = self.symmetric_form();
        let mut seen: BTreeSet<DimVector> = BTreeSet::new();
        let mut queue: VecDeque<DimVector> = (0..self.n).map(|i| DimVector::unit(self.n, i)).collect();
        while let Some(r) = queue.pop_front() {
            if !seen.insert(r.clone()) {
                continue;
            }
            for i in 0..self.n {
                let pairing = (0..self.n).map(|j| b[(i, j)] * r.0[j]).sum::<i64>();
                if pairing == 0 {
                    continue;
                }
                let mut img = r.0.clone();
                img[i] -= pairing;
                let img = DimVector(img);
                if img.is_nonnegative() && !img.is_zero() && !seen.contains(&img) {
                    queue.push_back(img);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// Kahn's algorithm, ties broken by ascending vertex index.
    pub fn topological_order(&self) -> Result<Vec<usize>> {
        let mut indeg = vec![0usize; self.n];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut ready: BTreeSet<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for &(s, t) in &self.arrows {
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        ready.insert(t);
                    }
                }
            }
        }
        if order.len() < self.n {
            let stuck = (0..self.n).find(|&v| indeg[v] > 0).unwrap_or(0);
            return Err(Error::Cyclic(stuck + 1));
        }
        Ok(order)
    }

    /// An ordering `(v1, …, vn)` of the vertices such that the simples
    /// `(S_v1, …, S_vn)` form an exceptional sequence. Verified on the
    /// simple modules: `Hom(S_a, S_b) = δ_ab` and `Ext¹(S_a, S_b)` is the number
    /// of arrows `a → b`, so every later simple must have no Ext into an
    /// earlier one.
    pub fn exceptional_vertex_order(&self) -> Result<Vec<usize>> {
        let order = self.topological_order()?;
        let e = self.euler_matrix();
        for (j, &later) in order.iter().enumerate() {
            for &earlier in &order[..j] {
                // Hom(S_later, S_earlier) = 0 for distinct simples; Ext = -⟨,⟩.
                let ext = -e[(later, earlier)];
                if ext != 0 {
                    return Err(Error::Convention(format!(
                        "Ext¹(S_{}, S_{}) = {ext} breaks the exceptional order",
                        later + 1,
                        earlier + 1
                    )));
                }
            }
        }
        Ok(order)
    }

    fn classify(&self) -> QuiverKind {
        if self.n == 2 && self.arrows.len() == 2 && self.arrows[0] == self.arrows[1] {
            return QuiverKind::Kronecker;
        }
        let mut edges = HashSet::new();
        for &(s, t) in &self.arrows {
            if s == t || !edges.insert((s.min(t), s.max(t))) {
                return QuiverKind::Other;
            }
        }
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut comp_of = vec![usize::MAX; self.n];
        let mut components = Vec::new();
        for start in 0..self.n {
            if comp_of[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut verts = vec![start];
            comp_of[start] = id;
            let mut i = 0;
            while i < verts.len() {
                let v = verts[i];
                for &u in &adj[v] {
                    if comp_of[u] == usize::MAX {
                        comp_of[u] = id;
                        verts.push(u);
                    }
                }
                i += 1;
            }
            verts.sort_unstable();
            let n_edges = verts.iter().map(|&v| adj[v].len()).sum::<usize>() / 2;
            if n_edges + 1 != verts.len() {
                return QuiverKind::Other;
            }
            match classify_tree(&verts, &adj) {
                Some((family, rank)) => components.push(DynkinComponent { family, rank, vertices: verts }),
                None => return QuiverKind::Other,
            }
        }
        QuiverKind::Dynkin(components)
    }
}

/// Classifies a tree by its branch structure.
fn classify_tree(verts: &[usize], adj: &[Vec<usize>]) -> Option<(DynkinFamily, usize)> {
    let n = verts.len();
    let branch: Vec<usize> = verts.iter().copied().filter(|&v| adj[v].len() > 2).collect();
    match branch.as_slice() {
        [] => Some((DynkinFamily::A, n)),
        [c] if adj[*c].len() == 3 => {
            let mut arms: Vec<usize> = adj[*c]
                .iter()
                .map(|&start| {
                    let (mut prev, mut cur, mut len) = (*c, start, 1);
                    while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Some((DynkinFamily::D, n)),
                [1, 2, 2..=4] => Some((DynkinFamily::E, n)),
                _ => None,
            }
        }
        _ => None,
    }
}

fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    let before: usize = text.split_inclusive('\n').take(line.saturating_sub(1)).map(str::len).sum();
    before + column.saturating_sub(1)
}

struct TextParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl TextParser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok.as_bytes()) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits.parse().or_else(|_| {
            self.pos = start;
            self.err("number too large")
        })
    }

    fn quiver(mut self) -> Result<Quiver> {
        if !self.eat("vertices") {
            return self.err("expected 'vertices'");
        }
        let n = self.number()?;
        if n == 0 {
            return self.err("vertex count must be positive");
        }
        let mut arrows = Vec::new();
        if self.eat(";") && self.eat("arrows") {
            self.skip_ws();
            if self.pos < self.src.len() {
                loop {
                    let at = self.pos;
                    let s = self.number()?;
                    if !self.eat("->") {
                        return self.err("expected '->'");
                    }
                    let t = self.number()?;
                    for v in [s, t] {
                        if v == 0 || v > n {
                            self.pos = at;
                            return Err(Error::VertexOutOfRange { vertex: v, n });
                        }
                    }
                    arrows.push((s - 1, t - 1));
                    if !self.eat(",") {
                        break;
                    }
                }
            }
        }
        self.eat(";");
        self.skip_ws();
        if self.pos != self.src.len() {
            return self.err("unexpected trailing input");
        }
        Quiver::new(n, arrows)
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_a2() {
        let q = Quiver::parse("vertices 2; arrows 1->2").unwrap();
        assert_eq!(q.num_vertices(), 2);
        assert_eq!(q.arrows(), &[(0, 1)]);
        assert_eq!(q.type_label(), "A_2");
    }

    #[test]
    fn parse_kronecker_keeps_multiplicity() {
        let q = Quiver::parse("vertices 2; arrows 1->2, 1->2").unwrap();
        assert_eq!(q.arrows().len(), 2);
        assert!(!q.is_dynkin());
        assert_eq!(q.kind(), &QuiverKind::Kronecker);
    }

    #[test]
    fn parse_rejects_cycle() {
        assert!(matches!(Quiver::parse("vertices 2; arrows 1->2, 2->1"), Err(Error::Cyclic(_))));
    }

    #[test]
    fn parse_rejects_out_of_range() {
        assert_eq!(
            Quiver::parse("vertices 2; arrows 1->3"),
            Err(Error::VertexOutOfRange { vertex: 3, n: 2 })
        );
        assert!(matches!(
            Quiver::parse(r#"{"vertices": 2, "arrows": [[0, 1]]}"#),
            Err(Error::VertexOutOfRange { vertex: 0, .. })
        ));
    }

    #[test]
    fn parse_reports_position() {
        match Quiver::parse("vertices 3; arrows 1->2, 2=>3") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 26),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(Quiver::parse("vertices 2; arrows 1->2 junk"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn whitespace_insensitive_and_json() {
        let a = Quiver::parse("  vertices   3 ;arrows 1 -> 2 ,2->3  ").unwrap();
        let b = Quiver::parse(r#"{"vertices": 3, "arrows": [[1,2],[2,3]]}"#).unwrap();
        assert_eq!(a, b);
        assert_eq!(Quiver::parse(&a.to_text()).unwrap(), a);
        assert_eq!(Quiver::parse("vertices 1").unwrap().type_label(), "A_1");
        assert_eq!(Quiver::parse("vertices 1; arrows").unwrap().type_label(), "A_1");
    }

    #[test]
    fn json_labels() {
        let q = Quiver::parse(r#"{"vertices": 2, "arrows": [[1,2]], "labels": ["x", "y"]}"#).unwrap();
        assert_eq!(q.labels().unwrap(), &["x".to_string(), "y".to_string()]);
        assert!(Quiver::parse(r#"{"vertices": 2, "labels": ["x"]}"#).is_err());
    }

    #[test]
    fn classification() {
        assert_eq!(Quiver::d(4).type_label(), "D_4");
        assert_eq!(Quiver::d(6).type_label(), "D_6");
        assert_eq!(Quiver::e(6).type_label(), "E_6");
        assert_eq!(Quiver::e(8).type_label(), "E_8");
        assert_eq!(Quiver::new(3, vec![]).unwrap().type_label(), "A_1xA_1xA_1");
        // Ã_2 as an acyclic triangle
        let affine = Quiver::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(affine.kind(), &QuiverKind::Other);
        // star with four arms
        let star = Quiver::new(5, vec![(0, 4), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert!(!star.is_dynkin());
        // E_9 shape (1,2,5) is not Dynkin
        let mut arrows: Vec<(usize, usize)> = (1..8).map(|i| (i - 1, i)).collect();
        arrows.push((2, 8));
        assert!(!Quiver::new(9, arrows).unwrap().is_dynkin());
    }

    #[test]
    fn euler_and_symmetric_forms() {
        let a2 = Quiver::linear_a(2);
        assert_eq!(a2.euler_matrix(), IntMatrix::from_rows(&[vec![1, -1], vec![0, 1]]));
        assert_eq!(a2.symmetric_form(), IntMatrix::from_rows(&[vec![2, -1], vec![-1, 2]]));
        let k = Quiver::kronecker();
        assert_eq!(k.euler_matrix(), IntMatrix::from_rows(&[vec![1, -2], vec![0, 1]]));
        assert_eq!(k.symmetric_form(), IntMatrix::from_rows(&[vec![2, -2], vec![-2, 2]]));
        assert_eq!(a2.euler_form(&[1, 0], &[0, 1]), -1);
        for q in [Quiver::linear_a(4), Quiver::d(5), Quiver::e(7)] {
            let b = q.symmetric_form();
            assert!(b.is_symmetric());
            for i in 0..q.num_vertices() {
                assert_eq!(b[(i, i)], 2);
            }
            assert_eq!(q.euler_matrix().det(), 1);
        }
    }

    #[test]
    fn coxeter_matrix_a2() {
        let a2 = Quiver::linear_a(2);
        let phi = a2.coxeter_matrix();
        assert_eq!(phi.mul_vec(&[1, 0]), vec![0, 1]);
        assert_eq!(phi.det(), 1);
        assert_eq!(&phi * &a2.inverse_coxeter_matrix(), IntMatrix::identity(2));
    }

    #[test]
    fn root_counts() {
        assert_eq!(Quiver::linear_a(2).positive_roots().unwrap().len(), 3);
        assert_eq!(Quiver::linear_a(3).positive_roots().unwrap().len(), 6);
        assert_eq!(Quiver::d(4).positive_roots().unwrap().len(), 12);
        assert!(Quiver::kronecker().positive_roots().is_err());
        assert_eq!(
            Quiver::linear_a(2).positive_roots().unwrap(),
            vec![DimVector(vec![0, 1]), DimVector(vec![1, 0]), DimVector(vec![1, 1])]
        );
    }

    #[test]
    fn exceptional_orders() {
        assert_eq!(Quiver::linear_a(2).exceptional_vertex_order().unwrap(), vec![0, 1]);
        assert_eq!(Quiver::linear_a(3).exceptional_vertex_order().unwrap(), vec![0, 1, 2]);
        assert_eq!(Quiver::linear_a(1).exceptional_vertex_order().unwrap(), vec![0]);
        let q = Quiver::new(3, vec![(2, 1), (1, 0)]).unwrap();
        assert_eq!(q.exceptional_vertex_order().unwrap(), vec![2, 1, 0]);
    }

    #[test]
    fn dim_vector_parse() {
        assert_eq!(DimVector::parse("(1, 0,2)").unwrap(), DimVector(vec![1, 0, 2]));
        assert!(DimVector::parse("1,0").is_err());
        assert!(DimVector::parse("(1,x)").is_err());
    }
}
