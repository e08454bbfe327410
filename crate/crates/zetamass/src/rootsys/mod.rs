//! Root-system and Weyl-group engine for small rank: exact rational root
//! data, exponent counts, coweight cell volumes, the Langlands volume
//! formula, and the W0/standard-parabolic correspondence.
//!
//! All coordinates are exact rationals.  Types C and G use a scaled diagonal
//! metric so that long roots have squared length 2 while every coordinate
//! stays rational.

mod coeffs;

pub use coeffs::{
    conjecture_coeffs, sln_coefficient_crosscheck, CoeffFlavor, CoeffRow, CoeffTable,
    CoeffValue, SlnCrosscheckReport, SlnCrosscheckRow,
};

use crate::error::{Error, Result};
use crate::exactmath::{fmt_qq, hp_from_qq, prec_bits, qq, qq_int, QQ};
use crate::masscalc::siegel_volume_nf;
use num_traits::{One, Signed, Zero};
use rug::Float;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

/// Supported Cartan types.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootType {
    A,
    B,
    C,
    D,
    G,
}

impl RootType {
    pub fn as_str(self) -> &'static str {
        match self {
            RootType::A => "A",
            RootType::B => "B",
            RootType::C => "C",
            RootType::D => "D",
            RootType::G => "G",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(RootType::A),
            "B" | "b" => Ok(RootType::B),
            "C" | "c" => Ok(RootType::C),
            "D" | "d" => Ok(RootType::D),
            "G" | "g" => Ok(RootType::G),
            other => Err(Error::input(format!(
                "unsupported root system type '{other}': expected A, B, C, D or G"
            ))),
        }
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One Weyl element: its action as an exact matrix on the ambient space and
/// a reduced word in the simple reflections (empty word = identity).
#[derive(Debug, Clone)]
pub struct WeylElement {
    matrix: Vec<Vec<QQ>>,
    word: Vec<usize>,
}

impl WeylElement {
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Render the word as `s1*s2*...` with `e` for the identity.
    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            "e".to_string()
        } else {
            self.word
                .iter()
                .map(|i| format!("s{}", i + 1))
                .collect::<Vec<_>>()
                .join("*")
        }
    }

    pub fn apply(&self, v: &[QQ]) -> Vec<QQ> {
        mat_apply(&self.matrix, v)
    }
}

/// A root system with exact rational coordinates, its positive roots, Weyl
/// vector and fully enumerated Weyl group.
#[derive(Debug, Clone)]
pub struct RootSystemData {
    type_label: RootType,
    rank: usize,
    dim: usize,
    /// The bilinear form is `metric * (euclidean dot)`.
    metric: QQ,
    simple_roots: Vec<Vec<QQ>>,
    positive_roots: Vec<Vec<QQ>>,
    positive_set: BTreeSet<Vec<QQ>>,
    rho: Vec<QQ>,
    weyl: Vec<WeylElement>,
    /// Inverse of the simple-root Gram matrix, for simple-basis expansions.
    gram_inv: Vec<Vec<QQ>>,
}

// ---------------------------------------------------------------------------
// exact linear algebra helpers (dimensions <= 5)
// ---------------------------------------------------------------------------

fn mat_apply(m: &[Vec<QQ>], v: &[QQ]) -> Vec<QQ> {
    m.iter()
        .map(|row| {
            let mut s = QQ::zero();
            for (a, b) in row.iter().zip(v) {
                s += a * b;
            }
            s
        })
        .collect()
}

fn mat_mul(a: &[Vec<QQ>], b: &[Vec<QQ>]) -> Vec<Vec<QQ>> {
    let n = a.len();
    let mut out = vec![vec![QQ::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                let prod = &a[i][k] * &b[k][j];
                out[i][j] += prod;
            }
        }
    }
    out
}

fn identity(n: usize) -> Vec<Vec<QQ>> {
    let mut m = vec![vec![QQ::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = QQ::one();
    }
    m
}

/// Exact inverse by Gauss-Jordan elimination; `None` for singular input.
fn mat_inverse(m: &[Vec<QQ>]) -> Option<Vec<Vec<QQ>>> {
    let n = m.len();
    let mut a = m.to_vec();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let t = &f * &a[col][j];
                a[r][j] -= t;
                let t = &f * &inv[col][j];
                inv[r][j] -= t;
            }
        }
    }
    Some(inv)
}

/// Exact determinant by fraction-free-enough Gaussian elimination.
fn mat_det(m: &[Vec<QQ>]) -> QQ {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = QQ::one();
    for col in 0..n {
        let pivot = match (col..n).find(|&r| !a[r][col].is_zero()) {
            Some(p) => p,
            None => return QQ::zero(),
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &p;
            for j in col..n {
                let t = &f * &a[col][j];
                a[r][j] -= t;
            }
        }
    }
    det
}

// ---------------------------------------------------------------------------
// construction
// ---------------------------------------------------------------------------

fn basis_vector(dim: usize, i: usize, c: QQ) -> Vec<QQ> {
    let mut v = vec![QQ::zero(); dim];
    v[i] = c;
    v
}

fn classical_positive_count(t: RootType, r: usize) -> usize {
    match t {
        RootType::A => r * (r + 1) / 2,
        RootType::B | RootType::C => r * r,
        RootType::D => r * (r - 1),
        RootType::G => 6,
    }
}

fn classical_weyl_order(t: RootType, r: usize) -> usize {
    let fact = |n: usize| (1..=n).product::<usize>();
    match t {
        RootType::A => fact(r + 1),
        RootType::B | RootType::C => (1 << r) * fact(r),
        RootType::D => (1 << (r - 1)) * fact(r),
        RootType::G => 12,
    }
}

/// Build a root system of the given type and rank (capped at 4).  The long
/// roots are normalized to squared length 2.
pub fn build_root_system(type_label: RootType, rank: usize) -> Result<RootSystemData> {
    let supported = match type_label {
        RootType::A => (1..=4).contains(&rank),
        RootType::B | RootType::C => (2..=4).contains(&rank),
        RootType::D => (3..=4).contains(&rank),
        RootType::G => rank == 2,
    };
    if !supported {
        return Err(Error::input(format!(
            "unsupported root system {type_label}{rank}: supported are A1-A4, B2-B4, C2-C4, D3-D4, G2"
        )));
    }

    let (dim, metric, simple_roots): (usize, QQ, Vec<Vec<QQ>>) = match type_label {
        RootType::A => {
            let dim = rank + 1;
            let mut simples = Vec::new();
            for i in 0..rank {
                let mut v = vec![QQ::zero(); dim];
                v[i] = QQ::one();
                v[i + 1] = -QQ::one();
                simples.push(v);
            }
            (dim, QQ::one(), simples)
        }
        RootType::B => {
            let mut simples = Vec::new();
            for i in 0..rank - 1 {
                let mut v = vec![QQ::zero(); rank];
                v[i] = QQ::one();
                v[i + 1] = -QQ::one();
                simples.push(v);
            }
            simples.push(basis_vector(rank, rank - 1, QQ::one()));
            (rank, QQ::one(), simples)
        }
        RootType::C => {
            let mut simples = Vec::new();
            for i in 0..rank - 1 {
                let mut v = vec![QQ::zero(); rank];
                v[i] = QQ::one();
                v[i + 1] = -QQ::one();
                simples.push(v);
            }
            simples.push(basis_vector(rank, rank - 1, qq_int(2)));
            (rank, qq(1, 2), simples)
        }
        RootType::D => {
            let mut simples = Vec::new();
            for i in 0..rank - 1 {
                let mut v = vec![QQ::zero(); rank];
                v[i] = QQ::one();
                v[i + 1] = -QQ::one();
                simples.push(v);
            }
            let mut v = vec![QQ::zero(); rank];
            v[rank - 2] = QQ::one();
            v[rank - 1] = QQ::one();
            simples.push(v);
            (rank, QQ::one(), simples)
        }
        RootType::G => {
            // Realized inside the sum-zero hyperplane of QQ^3; the metric
            // scale 1/3 makes the long simple root have squared length 2.
            let short = vec![QQ::one(), -QQ::one(), QQ::zero()];
            let long = vec![qq_int(-2), QQ::one(), QQ::one()];
            (3, qq(1, 3), vec![short, long])
        }
    };

    let form = |x: &[QQ], y: &[QQ]| -> QQ {
        let mut s = QQ::zero();
        for (a, b) in x.iter().zip(y) {
            s += a * b;
        }
        s * &metric
    };

    // Simple-root Gram matrix and its inverse (for simple-basis expansions).
    let gram: Vec<Vec<QQ>> = simple_roots
        .iter()
        .map(|a| simple_roots.iter().map(|b| form(a, b)).collect())
        .collect();
    let gram_inv = mat_inverse(&gram)
        .ok_or_else(|| Error::computation("simple-root Gram matrix is singular"))?;

    // Close the simple roots under simple reflections to obtain all roots.
    let reflect = |root_i: usize, v: &[QQ], simples: &[Vec<QQ>]| -> Vec<QQ> {
        let alpha = &simples[root_i];
        let norm = form(alpha, alpha);
        let coeff = form(v, alpha) * qq_int(2) / norm;
        v.iter()
            .zip(alpha)
            .map(|(x, a)| x - &(&coeff * a))
            .collect()
    };
    let mut all: BTreeSet<Vec<QQ>> = simple_roots.iter().cloned().collect();
    let mut queue: VecDeque<Vec<QQ>> = simple_roots.iter().cloned().collect();
    while let Some(v) = queue.pop_front() {
        for i in 0..rank {
            let w = reflect(i, &v, &simple_roots);
            if all.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }

    // Split into positive/negative via the simple-basis expansion.
    let simple_coords = |v: &[QQ]| -> Vec<QQ> {
        let b: Vec<QQ> = simple_roots.iter().map(|a| form(v, a)).collect();
        mat_apply(&gram_inv, &b)
    };
    let mut positive_roots: Vec<Vec<QQ>> = Vec::new();
    for v in &all {
        let coords = simple_coords(v);
        if coords.iter().all(|c| !c.is_negative()) {
            positive_roots.push(v.clone());
        }
    }
    // Deterministic ordering: by simple-basis coordinates.
    positive_roots.sort_by_key(|v| simple_coords(v));
    if positive_roots.len() != classical_positive_count(type_label, rank)
        || all.len() != 2 * positive_roots.len()
    {
        return Err(Error::computation(format!(
            "root enumeration for {type_label}{rank} produced {} positive roots (expected {})",
            positive_roots.len(),
            classical_positive_count(type_label, rank)
        )));
    }

    // Weyl vector.
    let mut rho = vec![QQ::zero(); dim];
    for v in &positive_roots {
        for (r, x) in rho.iter_mut().zip(v) {
            *r += x;
        }
    }
    for r in rho.iter_mut() {
        *r /= qq_int(2);
    }

    // Enumerate W by breadth-first closure of the simple reflections, which
    // also yields a reduced word for every element.
    let mut gens: Vec<Vec<Vec<QQ>>> = Vec::new();
    for alpha in simple_roots.iter() {
        let norm = form(alpha, alpha);
        let mut m = identity(dim);
        // s(x) = x - <x, alpha^vee> alpha; as a matrix: I - alpha (2/norm) alpha^T M
        for a in 0..dim {
            for b in 0..dim {
                let t = &alpha[a] * &alpha[b] * qq_int(2) * &metric / &norm;
                m[a][b] -= t;
            }
        }
        gens.push(m);
    }
    let mut weyl: Vec<WeylElement> = vec![WeylElement {
        matrix: identity(dim),
        word: Vec::new(),
    }];
    let mut seen: BTreeMap<Vec<QQ>, usize> = BTreeMap::new();
    let flatten = |m: &[Vec<QQ>]| -> Vec<QQ> { m.iter().flatten().cloned().collect() };
    seen.insert(flatten(&weyl[0].matrix), 0);
    let mut head = 0usize;
    while head < weyl.len() {
        let (mat, word) = (weyl[head].matrix.clone(), weyl[head].word.clone());
        for (g, gen) in gens.iter().enumerate() {
            let prod = mat_mul(&mat, gen);
            let key = flatten(&prod);
            if !seen.contains_key(&key) {
                let mut w = word.clone();
                w.push(g);
                seen.insert(key, weyl.len());
                weyl.push(WeylElement {
                    matrix: prod,
                    word: w,
                });
            }
        }
        head += 1;
    }
    if weyl.len() != classical_weyl_order(type_label, rank) {
        return Err(Error::computation(format!(
            "Weyl enumeration for {type_label}{rank} produced {} elements (expected {})",
            weyl.len(),
            classical_weyl_order(type_label, rank)
        )));
    }

    let positive_set: BTreeSet<Vec<QQ>> = positive_roots.iter().cloned().collect();
    Ok(RootSystemData {
        type_label,
        rank,
        dim,
        metric,
        simple_roots,
        positive_roots,
        positive_set,
        rho,
        weyl,
        gram_inv,
    })
}

impl RootSystemData {
    pub fn type_label(&self) -> RootType {
        self.type_label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn simple_roots(&self) -> &[Vec<QQ>] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Vec<QQ>] {
        &self.positive_roots
    }

    pub fn rho(&self) -> &[QQ] {
        &self.rho
    }

    pub fn weyl_elements(&self) -> &[WeylElement] {
        &self.weyl
    }

    pub fn weyl_order(&self) -> usize {
        self.weyl.len()
    }

    /// The bilinear form `⟨x, y⟩`.
    pub fn form(&self, x: &[QQ], y: &[QQ]) -> QQ {
        let mut s = QQ::zero();
        for (a, b) in x.iter().zip(y) {
            s += a * b;
        }
        s * &self.metric
    }

    /// The coroot `α∨ = 2α/⟨α,α⟩`.
    pub fn coroot(&self, alpha: &[QQ]) -> Vec<QQ> {
        let norm = self.form(alpha, alpha);
        let c = qq_int(2) / norm;
        alpha.iter().map(|x| x * &c).collect()
    }

    /// The pairing `⟨x, α∨⟩`.
    pub fn pair_coroot(&self, x: &[QQ], alpha: &[QQ]) -> QQ {
        let co = self.coroot(alpha);
        self.form(x, &co)
    }

    /// Coordinates of `v` in the simple-root basis.
    pub fn simple_coords(&self, v: &[QQ]) -> Vec<QQ> {
        let b: Vec<QQ> = self.simple_roots.iter().map(|a| self.form(v, a)).collect();
        mat_apply(&self.gram_inv, &b)
    }

    pub fn is_positive_root(&self, v: &[QQ]) -> bool {
        self.positive_set.contains(v)
    }

    /// Index of `v` among the simple roots, if it is one.
    pub fn simple_index(&self, v: &[QQ]) -> Option<usize> {
        self.simple_roots.iter().position(|a| a == v)
    }

    /// Half-sum of the positive roots lying in the span of the simple roots
    /// selected by `j_mask` (the Levi part of the corresponding parabolic).
    pub fn rho_levi(&self, j_mask: u32) -> Vec<QQ> {
        let mut acc = vec![QQ::zero(); self.dim];
        for v in &self.positive_roots {
            let coords = self.simple_coords(v);
            let inside = coords
                .iter()
                .enumerate()
                .all(|(i, c)| c.is_zero() || (j_mask >> i) & 1 == 1);
            if inside {
                for (a, x) in acc.iter_mut().zip(v) {
                    *a += x;
                }
            }
        }
        for a in acc.iter_mut() {
            *a /= qq_int(2);
        }
        acc
    }

    /// Exact determinant of the coroot Gram matrix.
    pub fn coroot_gram_det(&self) -> QQ {
        let coroots: Vec<Vec<QQ>> = self.simple_roots.iter().map(|a| self.coroot(a)).collect();
        let gram: Vec<Vec<QQ>> = coroots
            .iter()
            .map(|a| coroots.iter().map(|b| self.form(a, b)).collect())
            .collect();
        mat_det(&gram)
    }
}

// ---------------------------------------------------------------------------
// exponent counts and volumes
// ---------------------------------------------------------------------------

/// The counts `n_i = #{α>0 : ⟨ρ,α∨⟩ = i} − #{α>0 : ⟨ρ,α∨⟩ = i+1}`, returned
/// for all `i` with `n_i ≠ 0`.
pub fn exponent_counts(rs: &RootSystemData) -> Result<BTreeMap<u32, i64>> {
    let mut height_counts: BTreeMap<u32, i64> = BTreeMap::new();
    for alpha in rs.positive_roots() {
        let h = rs.pair_coroot(rs.rho(), alpha);
        if !h.is_integer() || h.is_negative() || h.is_zero() {
            return Err(Error::computation(format!(
                "non-positive or non-integral height {} encountered",
                fmt_qq(&h)
            )));
        }
        let h = h.to_integer().to_string().parse::<u32>().map_err(|_| {
            Error::computation("height exceeds u32 range")
        })?;
        *height_counts.entry(h).or_insert(0) += 1;
    }
    let max_h = *height_counts.keys().max().unwrap_or(&0);
    let mut out = BTreeMap::new();
    let mut sum = 0i64;
    let mut weighted = 0i64;
    for i in 1..=max_h {
        let n_i = height_counts.get(&i).copied().unwrap_or(0)
            - height_counts.get(&(i + 1)).copied().unwrap_or(0);
        if n_i != 0 {
            out.insert(i, n_i);
            sum += n_i;
            weighted += i as i64 * n_i;
        }
    }
    // Classical identities: Σ n_i = rank, Σ i·n_i = |Φ⁺|.
    if sum != rs.rank() as i64 || weighted != rs.positive_roots().len() as i64 {
        return Err(Error::computation(
            "exponent-count identities violated (sum over n_i)",
        ));
    }
    Ok(out)
}

/// `v_G` = volume of the half-open coroot-basis cell = sqrt(det Gram(α∨)).
pub fn coweight_cell_volume(rs: &RootSystemData, precision_digits: u32) -> Float {
    let det = rs.coroot_gram_det();
    let prec = prec_bits(precision_digits);
    hp_from_qq(prec, &det).sqrt()
}

/// Exponent-sign convention for the volume formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VolumeConvention {
    /// `v_G · ∏ ζ̂(i)^{-n_i}` (the formula as printed).
    AsPrinted,
    /// `v_G · ∏ ζ̂(i)^{+n_i}`.
    Reciprocal,
}

impl VolumeConvention {
    pub fn as_str(self) -> &'static str {
        match self {
            VolumeConvention::AsPrinted => "as_printed",
            VolumeConvention::Reciprocal => "reciprocal",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "as_printed" => Ok(VolumeConvention::AsPrinted),
            "reciprocal" => Ok(VolumeConvention::Reciprocal),
            other => Err(Error::input(format!(
                "unknown volume convention '{other}': expected as_printed or reciprocal"
            ))),
        }
    }
}

/// The volume formula evaluated under a convention, with the type-A Siegel
/// cross-reference attached when available.
#[derive(Debug, Clone)]
pub struct LanglandsVolume {
    pub value: Float,
    pub convention: VolumeConvention,
    /// For type A of rank r: the Siegel volume `m_{Q,r+1}` and the ratio
    /// `value / siegel`, reported for comparison (the conventions visibly
    /// disagree under a naive reading — this is surfaced, not resolved).
    pub siegel: Option<Float>,
    pub ratio: Option<Float>,
}

/// Evaluate `v_G · ∏_{i≥1} ζ̂(i)^{∓n_i}` from supplied zeta values.
pub fn langlands_volume(
    rs: &RootSystemData,
    zeta_values: &BTreeMap<u32, Float>,
    convention: VolumeConvention,
    precision_digits: u32,
) -> Result<LanglandsVolume> {
    let counts = exponent_counts(rs)?;
    let prec = prec_bits(precision_digits);
    let mut value = coweight_cell_volume(rs, precision_digits);
    for (&i, &n_i) in &counts {
        let z = zeta_values
            .get(&i)
            .ok_or_else(|| Error::input(format!("missing zeta value for i = {i}")))?;
        let signed = match convention {
            VolumeConvention::AsPrinted => -n_i,
            VolumeConvention::Reciprocal => n_i,
        };
        let mut e = signed;
        while e > 0 {
            value *= z;
            e -= 1;
        }
        while e < 0 {
            value /= z;
            e += 1;
        }
    }
    let (siegel, ratio) = if rs.type_label() == RootType::A {
        let s = siegel_volume_nf(rs.rank() + 1, precision_digits)?;
        let r = Float::with_val(prec, &value / &s);
        (Some(s), Some(r))
    } else {
        (None, None)
    };
    Ok(LanglandsVolume {
        value,
        convention,
        siegel,
        ratio,
    })
}

// ---------------------------------------------------------------------------
// W0 and standard parabolics
// ---------------------------------------------------------------------------

/// A standard parabolic, indexed by its subset `J ⊆ Δ` (bitmask) together
/// with the W0 element realizing it.
#[derive(Debug, Clone)]
pub struct ParabolicIndex {
    pub j_mask: u32,
    pub rank_p: usize,
    pub w_index: usize,
    pub w_word: Vec<usize>,
}

impl ParabolicIndex {
    /// `G` for the full subset, `B` for the empty one, `P{i,..}` otherwise
    /// (listing the 1-based simple indices in `J`).
    pub fn label(&self, rank: usize) -> String {
        let full = (1u32 << rank) - 1;
        if self.j_mask == full {
            "G".to_string()
        } else if self.j_mask == 0 {
            "B".to_string()
        } else {
            let inside: Vec<String> = (0..rank)
                .filter(|i| (self.j_mask >> i) & 1 == 1)
                .map(|i| (i + 1).to_string())
                .collect();
            format!("P{{{}}}", inside.join(","))
        }
    }
}

/// Enumerate `W0 = {w ∈ W : wΔ ⊆ Δ ∪ Φ⁻}` and attach to each element the
/// subset `J_w = {α ∈ Δ : wα ∈ Δ}`.  The map `w ↦ J_w` must be a bijection
/// onto the `2^rank` subsets.
pub fn enumerate_w0(rs: &RootSystemData) -> Result<Vec<ParabolicIndex>> {
    let rank = rs.rank();
    let mut out: Vec<ParabolicIndex> = Vec::new();
    for (idx, w) in rs.weyl_elements().iter().enumerate() {
        let mut mask = 0u32;
        let mut ok = true;
        for (i, alpha) in rs.simple_roots().iter().enumerate() {
            let image = w.apply(alpha);
            if rs.simple_index(&image).is_some() {
                mask |= 1 << i;
            } else {
                let neg: Vec<QQ> = image.iter().map(|x| -x).collect();
                if !rs.is_positive_root(&neg) {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            out.push(ParabolicIndex {
                j_mask: mask,
                rank_p: rank - mask.count_ones() as usize,
                w_index: idx,
                w_word: w.word().to_vec(),
            });
        }
    }
    // Bijection check: exactly 2^rank elements, all masks distinct.
    let masks: BTreeSet<u32> = out.iter().map(|p| p.j_mask).collect();
    if out.len() != 1 << rank || masks.len() != out.len() {
        return Err(Error::computation("W0 correspondence violated"));
    }
    out.sort_by_key(|p| (p.rank_p, p.j_mask));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_counts_hold() {
        for (t, r, pos, w) in [
            (RootType::A, 1usize, 1usize, 2usize),
            (RootType::A, 2, 3, 6),
            (RootType::A, 3, 6, 24),
            (RootType::A, 4, 10, 120),
            (RootType::B, 2, 4, 8),
            (RootType::B, 3, 9, 48),
            (RootType::C, 3, 9, 48),
            (RootType::D, 4, 12, 192),
            (RootType::G, 2, 6, 12),
        ] {
            let rs = build_root_system(t, r).unwrap();
            assert_eq!(rs.positive_roots().len(), pos, "{t}{r}");
            assert_eq!(rs.weyl_order(), w, "{t}{r}");
            for alpha in rs.simple_roots() {
                assert_eq!(rs.pair_coroot(rs.rho(), alpha), QQ::one(), "{t}{r}");
            }
            // Long-root normalization: max squared length is 2.
            let max_norm = rs
                .positive_roots()
                .iter()
                .map(|a| rs.form(a, a))
                .max()
                .unwrap();
            assert_eq!(max_norm, qq_int(2), "{t}{r}");
        }
        assert!(build_root_system(RootType::A, 5).is_err());
        assert!(build_root_system(RootType::G, 3).is_err());
        assert!(build_root_system(RootType::D, 2).is_err());
    }

    #[test]
    fn weyl_group_is_closed_under_products() {
        for (t, r) in [
            (RootType::A, 2usize),
            (RootType::A, 3),
            (RootType::B, 2),
            (RootType::G, 2),
        ] {
            let rs = build_root_system(t, r).unwrap();
            let flat: BTreeSet<Vec<QQ>> = rs
                .weyl_elements()
                .iter()
                .map(|w| w.matrix.iter().flatten().cloned().collect())
                .collect();
            for a in rs.weyl_elements() {
                for b in rs.weyl_elements() {
                    let prod = mat_mul(&a.matrix, &b.matrix);
                    let key: Vec<QQ> = prod.iter().flatten().cloned().collect();
                    assert!(flat.contains(&key), "{t}{r}: product escaped the group");
                }
            }
        }
    }

    #[test]
    fn height_multisets_match_enumeration() {
        // B2 heights {1,1,2,3}; G2 heights {1,1,2,3,4,5}.
        let b2 = build_root_system(RootType::B, 2).unwrap();
        let mut hs: Vec<QQ> = b2
            .positive_roots()
            .iter()
            .map(|a| b2.pair_coroot(b2.rho(), a))
            .collect();
        hs.sort();
        assert_eq!(hs, vec![qq_int(1), qq_int(1), qq_int(2), qq_int(3)]);
        let g2 = build_root_system(RootType::G, 2).unwrap();
        let mut hs: Vec<QQ> = g2
            .positive_roots()
            .iter()
            .map(|a| g2.pair_coroot(g2.rho(), a))
            .collect();
        hs.sort();
        assert_eq!(
            hs,
            vec![
                qq_int(1),
                qq_int(1),
                qq_int(2),
                qq_int(3),
                qq_int(4),
                qq_int(5)
            ]
        );
    }

    #[test]
    fn exponent_count_tables() {
        // A_{n-1}: n_i = 1 for 1 <= i <= n-1 (checked for n <= 5).
        for r in 1..=4usize {
            let rs = build_root_system(RootType::A, r).unwrap();
            let counts = exponent_counts(&rs).unwrap();
            let expected: BTreeMap<u32, i64> = (1..=r as u32).map(|i| (i, 1)).collect();
            assert_eq!(counts, expected, "A{r}");
        }
        let g2 = build_root_system(RootType::G, 2).unwrap();
        let counts = exponent_counts(&g2).unwrap();
        let expected: BTreeMap<u32, i64> = [(1, 1), (5, 1)].into_iter().collect();
        assert_eq!(counts, expected);
        let b2 = build_root_system(RootType::B, 2).unwrap();
        let counts = exponent_counts(&b2).unwrap();
        let expected: BTreeMap<u32, i64> = [(1, 1), (3, 1)].into_iter().collect();
        assert_eq!(counts, expected);
        // B3 exponents 1,3,5; D4 exponents 1,3,3,5; C3 exponents 1,3,5.
        let b3 = build_root_system(RootType::B, 3).unwrap();
        let expected: BTreeMap<u32, i64> = [(1, 1), (3, 1), (5, 1)].into_iter().collect();
        assert_eq!(exponent_counts(&b3).unwrap(), expected);
        let d4 = build_root_system(RootType::D, 4).unwrap();
        let expected: BTreeMap<u32, i64> = [(1, 1), (3, 2), (5, 1)].into_iter().collect();
        assert_eq!(exponent_counts(&d4).unwrap(), expected);
    }

    #[test]
    fn coweight_volumes() {
        // A1 -> sqrt(2); A2 -> sqrt(3); B2 -> 2; G2 -> sqrt(3).
        let cases = [
            (RootType::A, 1usize, 2.0f64),
            (RootType::A, 2, 3.0),
            (RootType::B, 2, 4.0),
            (RootType::G, 2, 3.0),
        ];
        for (t, r, det) in cases {
            let rs = build_root_system(t, r).unwrap();
            assert_eq!(rs.coroot_gram_det(), qq_int(det as i64), "{t}{r}");
            let v = coweight_cell_volume(&rs, 40);
            assert!((v.to_f64() - det.sqrt()).abs() < 1e-12, "{t}{r}");
        }
    }

    #[test]
    fn langlands_volume_conventions() {
        use crate::masscalc::completed_riemann_zeta;
        let digits = 40u32;
        let prec = prec_bits(digits);
        // A1: v_G * zetahat(1)^{-1} = sqrt(2) (zetahat(1) = 1).
        let a1 = build_root_system(RootType::A, 1).unwrap();
        let mut z = BTreeMap::new();
        z.insert(1u32, completed_riemann_zeta(1, digits).unwrap());
        let v = langlands_volume(&a1, &z, VolumeConvention::AsPrinted, digits).unwrap();
        assert!((v.value.to_f64() - 2f64.sqrt()).abs() < 1e-12);
        assert!(v.siegel.is_some() && v.ratio.is_some());
        // A2 under both conventions; the two differ and the Siegel reference
        // is attached for comparison.
        let a2 = build_root_system(RootType::A, 2).unwrap();
        let mut z = BTreeMap::new();
        for i in 1..=2u32 {
            z.insert(i, completed_riemann_zeta(i as usize, digits).unwrap());
        }
        let vp = langlands_volume(&a2, &z, VolumeConvention::AsPrinted, digits).unwrap();
        let vr = langlands_volume(&a2, &z, VolumeConvention::Reciprocal, digits).unwrap();
        // as_printed: sqrt(3)*6/pi; reciprocal: sqrt(3)*pi/6.
        let pi = crate::exactmath::hp_pi(prec);
        let target_p = Float::with_val(prec, 3).sqrt() * 6u32 / pi.clone();
        let target_r = Float::with_val(prec, 3).sqrt() * pi / 6u32;
        assert!((vp.value.to_f64() - target_p.to_f64()).abs() < 1e-10);
        assert!((vr.value.to_f64() - target_r.to_f64()).abs() < 1e-10);
        assert!(vp.siegel.as_ref().unwrap().to_f64() > 0.1);
        // Missing zeta value is an input error.
        let g2 = build_root_system(RootType::G, 2).unwrap();
        let mut z = BTreeMap::new();
        z.insert(1u32, completed_riemann_zeta(1, digits).unwrap());
        let err = langlands_volume(&g2, &z, VolumeConvention::AsPrinted, digits);
        assert!(err.is_err());
        let msg = format!("{}", err.unwrap_err());
        assert!(msg.contains("missing zeta value for i = 5"), "{msg}");
    }

    #[test]
    fn w0_enumeration_small_ranks() {
        // A1: identity (J = Delta) and the simple reflection (J = empty).
        let a1 = build_root_system(RootType::A, 1).unwrap();
        let w0 = enumerate_w0(&a1).unwrap();
        assert_eq!(w0.len(), 2);
        assert_eq!(w0[0].j_mask, 0b1);
        assert_eq!(w0[0].rank_p, 0);
        assert!(w0[0].w_word.is_empty());
        assert_eq!(w0[1].j_mask, 0);
        assert_eq!(w0[1].rank_p, 1);
        assert_eq!(w0[1].w_word, vec![0]);
        // A2 -> 4 elements, A3 -> 8 elements, and the masks are a bijection.
        for (t, r) in [
            (RootType::A, 2usize),
            (RootType::A, 3),
            (RootType::B, 2),
            (RootType::G, 2),
            (RootType::D, 4),
        ] {
            let rs = build_root_system(t, r).unwrap();
            let w0 = enumerate_w0(&rs).unwrap();
            assert_eq!(w0.len(), 1 << r, "{t}{r}");
            let masks: BTreeSet<u32> = w0.iter().map(|p| p.j_mask).collect();
            assert_eq!(masks.len(), 1 << r, "{t}{r}");
        }
    }

    #[test]
    fn w0_words_and_labels() {
        let a2 = build_root_system(RootType::A, 2).unwrap();
        let w0 = enumerate_w0(&a2).unwrap();
        // Sorted by (rank_p, mask): G first, Borel last.
        assert_eq!(w0[0].label(2), "G");
        assert_eq!(w0[3].label(2), "B");
        assert_eq!(w0[1].label(2), "P{1}");
        assert_eq!(w0[2].label(2), "P{2}");
        // J = {alpha1} is realized by w = s1*s2 (w alpha1 = alpha2).
        let p1 = &w0[1];
        let w = &a2.weyl_elements()[p1.w_index];
        assert_eq!(w.word_string(), "s1*s2");
        let image = w.apply(&a2.simple_roots()[0]);
        assert_eq!(image, a2.simple_roots()[1]);
        // Integrality of <w rho, alpha^vee> over the whole group.
        for w in a2.weyl_elements() {
            let wrho = w.apply(a2.rho());
            for alpha in a2.simple_roots() {
                assert!(a2.pair_coroot(&wrho, alpha).is_integer());
            }
        }
    }

    #[test]
    fn rho_levi_values() {
        let a2 = build_root_system(RootType::A, 2).unwrap();
        // J = {alpha1}: rho_J = alpha1/2.
        let rj = a2.rho_levi(0b01);
        let alpha1 = &a2.simple_roots()[0];
        let expected: Vec<QQ> = alpha1.iter().map(|x| x / qq_int(2)).collect();
        assert_eq!(rj, expected);
        // Full mask recovers rho; empty mask is zero.
        assert_eq!(a2.rho_levi(0b11), a2.rho().to_vec());
        assert!(a2.rho_levi(0).iter().all(|x| x.is_zero()));
    }
}
