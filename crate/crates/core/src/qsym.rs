//! Quasi-symmetric functions stored as exact coefficient vectors over a
//! fundamental basis: Gessel's `F_J` (type A), Chow's `F^B_J` (type B) and
//! Poirier's `F^P_{(rDes, Neg)}` (signed). Coefficients are polynomials in `q`.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, AddAssign, Mul};

use num_rational::Ratio;
use rayon::prelude::*;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::linalg;
use crate::perm::{DescentSet, SignedPermutation};
use crate::tableaux::{enumerate_bsyt, enumerate_sdt, enumerate_syt, Partition};

/// A polynomial in `q` with exact integer coefficients, ascending powers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QPoly(Vec<i64>);

impl QPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPoly(coeffs)
    }

    pub fn zero() -> Self {
        QPoly(Vec::new())
    }

    pub fn constant(c: i64) -> Self {
        QPoly::new(vec![c])
    }

    /// `c·q^j`.
    pub fn monomial(c: i64, j: usize) -> Self {
        let mut v = vec![0; j + 1];
        v[j] = c;
        QPoly::new(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn coeff(&self, j: usize) -> i64 {
        self.0.get(j).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// The constant value, when the polynomial has no positive powers of `q`.
    pub fn as_constant(&self) -> Option<i64> {
        (self.0.len() <= 1).then(|| self.coeff(0))
    }

    pub fn eval(&self, q: i64) -> i64 {
        self.0
            .iter()
            .rev()
            .fold(0i64, |acc, &c| acc.checked_mul(q).and_then(|x| x.checked_add(c)).expect("QPoly evaluation overflow"))
    }

    /// Coefficients padded with zeros to at least `len` entries.
    pub fn padded(&self, len: usize) -> Vec<i64> {
        let mut v = self.0.clone();
        if v.len() < len {
            v.resize(len, 0);
        }
        v
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        if self.0.len() < rhs.0.len() {
            self.0.resize(rhs.0.len(), 0);
        }
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a = a.checked_add(*b).expect("QPoly coefficient overflow");
        }
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(mut self, rhs: QPoly) -> QPoly {
        self += &rhs;
        self
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![0i64; self.0.len() + rhs.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in rhs.0.iter().enumerate() {
                let t = a.checked_mul(b).expect("QPoly coefficient overflow");
                v[i + j] = v[i + j].checked_add(t).expect("QPoly coefficient overflow");
            }
        }
        QPoly::new(v)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (j, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "q")?,
                (1, _) => write!(f, "{a}q")?,
                (_, 1) => write!(f, "q^{j}")?,
                _ => write!(f, "{a}q^{j}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(QPoly::new(Vec::deserialize(d)?))
    }
}

/// A fundamental basis: how basis elements are indexed and expanded.
pub trait Basis: Send + Sync + 'static {
    type Index: Ord + Clone + fmt::Debug + Send + Sync;
    const NAME: &'static str;

    fn validate(idx: &Self::Index, n: usize) -> Result<()>;
    /// The descent statistic of a signed permutation that indexes its term.
    fn index_of(w: &SignedPermutation) -> Self::Index;
    fn index_to_json(idx: &Self::Index, obj: &mut Map<String, Value>);
    fn index_from_json(obj: &Map<String, Value>) -> Result<Self::Index>;
    fn format_index(idx: &Self::Index) -> String;
    /// Monomials of the basis element in the truncation to `m` variables.
    fn expand(idx: &Self::Index, n: usize, m: usize, out: &mut dyn FnMut(&Monomial));
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GesselA;
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChowB;
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Poirier;

fn check_range(s: DescentSet, lo: usize, hi: usize) -> Result<()> {
    match s.iter().find(|&i| i < lo || i > hi) {
        Some(i) => Err(Error::InvalidQSym(format!("index {i} outside {lo}..={hi}"))),
        None => Ok(()),
    }
}

fn set_from_json(obj: &Map<String, Value>, key: &str) -> Result<DescentSet> {
    let v = obj.get(key).ok_or_else(|| Error::InvalidQSym(format!("missing \"{key}\"")))?;
    serde_json::from_value::<DescentSet>(v.clone()).map_err(|e| Error::InvalidQSym(e.to_string()))
}

fn set_json(s: DescentSet) -> Value {
    json!(s.to_vec())
}

/// Calls `visit` on every weakly increasing `i_1 ≤ … ≤ i_n` in `lo..=hi`
/// with `i_j < i_{j+1}` whenever `strict(j)`. A strict start (`0 ∈ J`) is
/// expressed by the caller through `lo`.
fn sequences(n: usize, lo: usize, hi: usize, strict: &dyn Fn(usize) -> bool, visit: &mut dyn FnMut(&[usize])) {
    fn rec(
        k: usize,
        n: usize,
        hi: usize,
        strict: &dyn Fn(usize) -> bool,
        cur: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
        lo: usize,
    ) {
        if k == n {
            visit(cur);
            return;
        }
        let start = if k == 0 { lo } else { cur[k - 1] + usize::from(strict(k)) };
        for i in start..=hi {
            cur.push(i);
            rec(k + 1, n, hi, strict, cur, visit, lo);
            cur.pop();
        }
    }
    rec(0, n, hi, strict, &mut Vec::with_capacity(n), visit, lo);
}

impl Basis for GesselA {
    type Index = DescentSet;
    const NAME: &'static str = "GesselA";

    fn validate(idx: &DescentSet, n: usize) -> Result<()> {
        check_range(*idx, 1, n.saturating_sub(1))
    }
    fn index_of(w: &SignedPermutation) -> DescentSet {
        w.des_a()
    }
    fn index_to_json(idx: &DescentSet, obj: &mut Map<String, Value>) {
        obj.insert("J".into(), set_json(*idx));
    }
    fn index_from_json(obj: &Map<String, Value>) -> Result<DescentSet> {
        set_from_json(obj, "J")
    }
    fn format_index(idx: &DescentSet) -> String {
        format!("F{idx}")
    }
    fn expand(idx: &DescentSet, n: usize, m: usize, out: &mut dyn FnMut(&Monomial)) {
        let mut mono = Monomial::one(m);
        sequences(n, 1, m, &|j| idx.contains(j), &mut |seq| {
            mono.clear();
            for &i in seq {
                mono.x[i] += 1;
            }
            out(&mono);
        });
    }
}

impl Basis for ChowB {
    type Index = DescentSet;
    const NAME: &'static str = "ChowB";

    fn validate(idx: &DescentSet, n: usize) -> Result<()> {
        check_range(*idx, 0, n.saturating_sub(1))
    }
    fn index_of(w: &SignedPermutation) -> DescentSet {
        w.des_b()
    }
    fn index_to_json(idx: &DescentSet, obj: &mut Map<String, Value>) {
        obj.insert("J".into(), set_json(*idx));
    }
    fn index_from_json(obj: &Map<String, Value>) -> Result<DescentSet> {
        set_from_json(obj, "J")
    }
    fn format_index(idx: &DescentSet) -> String {
        format!("FB{idx}")
    }
    /// `0 ≤ i_1 ≤ … ≤ i_n ≤ m`, strict at `j ∈ J`, with `i_0 = 0`.
    fn expand(idx: &DescentSet, n: usize, m: usize, out: &mut dyn FnMut(&Monomial)) {
        let lo = usize::from(idx.contains(0));
        let mut mono = Monomial::one(m);
        sequences(n, lo, m, &|j| idx.contains(j), &mut |seq| {
            mono.clear();
            for &i in seq {
                mono.x[i] += 1;
            }
            out(&mono);
        });
    }
}

impl Basis for Poirier {
    /// `(rDes, Neg)`.
    type Index = (DescentSet, DescentSet);
    const NAME: &'static str = "Poirier";

    fn validate(idx: &Self::Index, n: usize) -> Result<()> {
        check_range(idx.0, 1, n.saturating_sub(1))?;
        check_range(idx.1, 1, n)
    }
    fn index_of(w: &SignedPermutation) -> Self::Index {
        (w.rdes(), w.neg())
    }
    fn index_to_json(idx: &Self::Index, obj: &mut Map<String, Value>) {
        obj.insert("rDes".into(), set_json(idx.0));
        obj.insert("Neg".into(), set_json(idx.1));
    }
    fn index_from_json(obj: &Map<String, Value>) -> Result<Self::Index> {
        Ok((set_from_json(obj, "rDes")?, set_from_json(obj, "Neg")?))
    }
    fn format_index(idx: &Self::Index) -> String {
        format!("FP[{};{}]", idx.0, idx.1)
    }
    /// `1 ≤ i_1 ≤ … ≤ i_n ≤ m`, strict at `j ∈ rDes`, letter `j` in `y` when `j ∈ Neg`.
    fn expand(idx: &Self::Index, n: usize, m: usize, out: &mut dyn FnMut(&Monomial)) {
        let mut mono = Monomial::one(m);
        sequences(n, 1, m, &|j| idx.0.contains(j), &mut |seq| {
            mono.clear();
            for (k, &i) in seq.iter().enumerate() {
                if idx.1.contains(k + 1) {
                    mono.y[i] += 1;
                } else {
                    mono.x[i] += 1;
                }
            }
            out(&mono);
        });
    }
}

/// `x_0^{a_0}⋯x_m^{a_m} · y_1^{b_1}⋯y_m^{b_m}` (`y_0` is never used).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub x: Vec<u8>,
    pub y: Vec<u8>,
}

impl Monomial {
    pub fn one(m: usize) -> Self {
        Monomial { x: vec![0; m + 1], y: vec![0; m + 1] }
    }

    fn clear(&mut self) {
        self.x.iter_mut().for_each(|e| *e = 0);
        self.y.iter_mut().for_each(|e| *e = 0);
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            x: self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect(),
            y: self.y.iter().zip(&other.y).map(|(a, b)| a + b).collect(),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (name, exps) in [("x", &self.x), ("y", &self.y)] {
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                any = true;
                if e == 1 {
                    write!(f, "{name}{i}")?;
                } else {
                    write!(f, "{name}{i}^{e}")?;
                }
            }
        }
        if !any {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// A polynomial in `x_0..x_m, y_1..y_m` with `QPoly` coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TruncatedPoly {
    pub terms: BTreeMap<Monomial, QPoly>,
}

impl TruncatedPoly {
    pub fn add_term(&mut self, mono: &Monomial, c: &QPoly) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(mono.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(mono);
        }
    }

    pub fn add(&mut self, other: &TruncatedPoly) {
        for (m, c) in &other.terms {
            self.add_term(m, c);
        }
    }

    pub fn mul(&self, other: &TruncatedPoly) -> TruncatedPoly {
        let mut out = TruncatedPoly::default();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(&a.mul(b), &(ca * cb));
            }
        }
        out
    }
}

impl fmt::Display for TruncatedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c == &QPoly::constant(1) {
                write!(f, "{m}")?;
            } else {
                write!(f, "({c})·{m}")?;
            }
        }
        Ok(())
    }
}

/// An element of degree `n` in the span of a fundamental basis.
pub struct QSym<K: Basis> {
    degree: usize,
    terms: BTreeMap<K::Index, QPoly>,
    _basis: PhantomData<K>,
}

pub type QSymA = QSym<GesselA>;
pub type QSymB = QSym<ChowB>;
pub type QSymP = QSym<Poirier>;

impl<K: Basis> Clone for QSym<K> {
    fn clone(&self) -> Self {
        QSym { degree: self.degree, terms: self.terms.clone(), _basis: PhantomData }
    }
}

impl<K: Basis> PartialEq for QSym<K> {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.terms == other.terms
    }
}

impl<K: Basis> Eq for QSym<K> {}

impl<K: Basis> fmt::Debug for QSym<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<K: Basis> fmt::Display for QSym<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (idx, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let name = K::format_index(idx);
            if c == &QPoly::constant(1) {
                write!(f, "{name}")?;
            } else {
                write!(f, "({c})·{name}")?;
            }
        }
        Ok(())
    }
}

impl<K: Basis> QSym<K> {
    pub fn zero(degree: usize) -> Self {
        QSym { degree, terms: BTreeMap::new(), _basis: PhantomData }
    }

    /// The basis element indexed by `idx`.
    pub fn fundamental(degree: usize, idx: K::Index) -> Result<Self> {
        K::validate(&idx, degree)?;
        let mut f = QSym::zero(degree);
        f.terms.insert(idx, QPoly::constant(1));
        Ok(f)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<K::Index, QPoly> {
        &self.terms
    }

    pub fn coeff(&self, idx: &K::Index) -> QPoly {
        self.terms.get(idx).cloned().unwrap_or_default()
    }

    /// Adds `c·F_idx`, validating the index.
    pub fn add_term(&mut self, idx: K::Index, c: &QPoly) -> Result<()> {
        K::validate(&idx, self.degree)?;
        self.add_term_unchecked(idx, c);
        Ok(())
    }

    fn add_term_unchecked(&mut self, idx: K::Index, c: &QPoly) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(idx.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&idx);
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.add_term_unchecked(idx.clone(), c);
        }
        Ok(out)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &QPoly) -> Self {
        let mut out = QSym::zero(self.degree);
        for (idx, a) in &self.terms {
            out.add_term_unchecked(idx.clone(), &(a * c));
        }
        out
    }

    /// `Σ_{w∈A} weight(w)·F_{index(w)}`, summed in parallel.
    pub fn weighted_sum<F>(degree: usize, set: &[SignedPermutation], weight: F) -> Result<Self>
    where
        F: Fn(&SignedPermutation) -> QPoly + Sync,
    {
        if let Some(w) = set.iter().find(|w| w.rank() != degree) {
            return Err(Error::RankMismatch { left: degree, right: w.rank() });
        }
        let merged = set
            .par_iter()
            .fold(BTreeMap::new, |mut acc: BTreeMap<K::Index, QPoly>, w| {
                *acc.entry(K::index_of(w)).or_default() += &weight(w);
                acc
            })
            .reduce(BTreeMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_default() += &v;
                }
                a
            });
        let mut out = QSym::zero(degree);
        for (idx, c) in merged {
            out.add_term_unchecked(idx, &c);
        }
        Ok(out)
    }

    /// Substitutes zero for every variable past index `m`. Requires `m ≥ n`.
    pub fn expand(&self, m: usize) -> Result<TruncatedPoly> {
        if m < self.degree {
            return Err(Error::TruncationTooSmall { m, n: self.degree });
        }
        let mut out = TruncatedPoly::default();
        for (idx, c) in &self.terms {
            K::expand(idx, self.degree, m, &mut |mono| out.add_term(mono, c));
        }
        Ok(out)
    }

    /// Coefficients evaluated at `q = 1`, when every coefficient is constant.
    fn constant_terms(&self) -> Result<BTreeMap<K::Index, i64>> {
        self.terms
            .iter()
            .map(|(k, c)| {
                c.as_constant()
                    .map(|v| (k.clone(), v))
                    .ok_or_else(|| Error::InvalidQSym(format!("coefficient {c} is not constant")))
            })
            .collect()
    }

    /// Splits off the coefficient of `q^j` in every term.
    pub fn q_slice(&self, j: usize) -> Self {
        let mut out = QSym::zero(self.degree);
        for (idx, c) in &self.terms {
            out.add_term_unchecked(idx.clone(), &QPoly::constant(c.coeff(j)));
        }
        out
    }

    pub fn max_q_degree(&self) -> usize {
        self.terms.values().filter_map(QPoly::degree).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> Value {
        let width = self.degree + 1;
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(idx, c)| {
                let mut obj = Map::new();
                K::index_to_json(idx, &mut obj);
                obj.insert("coeffs".into(), json!(c.padded(width)));
                Value::Object(obj)
            })
            .collect();
        json!({ "degree": self.degree, "basis": K::NAME, "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidQSym(msg.to_string());
        let obj = v.as_object().ok_or_else(|| bad("expected an object"))?;
        let degree = obj.get("degree").and_then(Value::as_u64).ok_or_else(|| bad("missing \"degree\""))? as usize;
        let basis = obj.get("basis").and_then(Value::as_str).ok_or_else(|| bad("missing \"basis\""))?;
        if basis != K::NAME {
            return Err(Error::InvalidQSym(format!("basis {basis}, expected {}", K::NAME)));
        }
        let mut out = QSym::zero(degree);
        for t in obj.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing \"terms\""))? {
            let t = t.as_object().ok_or_else(|| bad("term must be an object"))?;
            let idx = K::index_from_json(t)?;
            let coeffs: Vec<i64> =
                serde_json::from_value(t.get("coeffs").cloned().ok_or_else(|| bad("missing \"coeffs\""))?)
                    .map_err(|e| Error::InvalidQSym(e.to_string()))?;
            out.add_term(idx, &QPoly::new(coeffs))?;
        }
        Ok(out)
    }
}

impl<K: Basis> Serialize for QSym<K> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de, K: Basis> Deserialize<'de> for QSym<K> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        QSym::from_json(&v).map_err(D::Error::custom)
    }
}

/// Any of the three kinds, as read from a JSON file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyQSym {
    A(QSymA),
    B(QSymB),
    P(QSymP),
}

impl AnyQSym {
    pub fn from_json(v: &Value) -> Result<Self> {
        match v.get("basis").and_then(Value::as_str) {
            Some(GesselA::NAME) => Ok(AnyQSym::A(QSym::from_json(v)?)),
            Some(ChowB::NAME) => Ok(AnyQSym::B(QSym::from_json(v)?)),
            Some(Poirier::NAME) => Ok(AnyQSym::P(QSym::from_json(v)?)),
            other => Err(Error::InvalidQSym(format!("unknown basis {other:?}"))),
        }
    }

    pub fn expand(&self, m: usize) -> Result<TruncatedPoly> {
        match self {
            AnyQSym::A(f) => f.expand(m),
            AnyQSym::B(f) => f.expand(m),
            AnyQSym::P(f) => f.expand(m),
        }
    }
}

/// `s_λ = Σ_{T∈SYT(λ)} F_{Des(T)}`.
pub fn schur_in_f(lambda: &Partition) -> QSymA {
    let mut f = QSym::zero(lambda.size());
    for t in enumerate_syt(lambda) {
        f.add_term_unchecked(t.des(), &QPoly::constant(1));
    }
    f
}

/// `s_{λ^-}(x_1,…)·s_{λ^+}(x_0,x_1,…) = Σ_{T∈BSYT(λ^-,λ^+)} F^B_{Des_B(T)}`.
pub fn bischur_in_fb(minus: &Partition, plus: &Partition) -> QSymB {
    let mut f = QSym::zero(minus.size() + plus.size());
    for t in enumerate_bsyt(minus, plus) {
        f.add_term_unchecked(t.des_b(), &QPoly::constant(1));
    }
    f
}

/// `Σ_{T∈BSYT(λ^-,λ^+)} F^P_{(Des(T), Neg(T))}`.
pub fn bischur_in_fp(minus: &Partition, plus: &Partition) -> QSymP {
    let mut f = QSym::zero(minus.size() + plus.size());
    for t in enumerate_bsyt(minus, plus) {
        f.add_term_unchecked((t.des(), t.neg()), &QPoly::constant(1));
    }
    f
}

/// The domino function `G_λ = Σ_{T∈SDT(λ)} F^B_{Des_B(T)}`.
pub fn domino_function_in_fb(lambda: &Partition) -> Result<QSymB> {
    let mut f = QSym::zero(lambda.size() / 2);
    for t in enumerate_sdt(lambda)? {
        f.add_term_unchecked(t.des_b(), &QPoly::constant(1));
    }
    Ok(f)
}

/// Reads `F^B_J` as the corresponding type A element when `0 ∉ J` for all terms.
pub fn chow_from_gessel(f: &QSymA) -> QSymB {
    let mut out = QSym::zero(f.degree());
    for (idx, c) in f.terms() {
        out.add_term_unchecked(*idx, c);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolutionKind {
    NonnegInteger,
    NonnegRational,
    MixedSign,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub coeffs: Vec<Ratio<i128>>,
    pub kind: SolutionKind,
}

impl Solution {
    /// Coefficients as integers, when they all are.
    pub fn integers(&self) -> Option<Vec<i128>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }
}

/// Writes `f` in terms of `basis` exactly. Coefficients must be constant in
/// `q`. Returns `None` when `f` is outside the span.
pub fn positivity_solve<K: Basis>(f: &QSym<K>, basis: &[QSym<K>]) -> Result<Option<Solution>> {
    let target = f.constant_terms()?;
    let cols = basis.iter().map(QSym::constant_terms).collect::<Result<Vec<_>>>()?;
    if let Some(b) = basis.iter().find(|b| b.degree != f.degree) {
        return Err(Error::DegreeMismatch { left: f.degree, right: b.degree });
    }
    let mut rows: Vec<K::Index> = target.keys().cloned().collect();
    for c in &cols {
        rows.extend(c.keys().cloned());
    }
    rows.sort();
    rows.dedup();
    let a: Vec<Vec<i128>> =
        rows.iter().map(|r| cols.iter().map(|c| c.get(r).copied().unwrap_or(0) as i128).collect()).collect();
    let b: Vec<i128> = rows.iter().map(|r| target.get(r).copied().unwrap_or(0) as i128).collect();
    let Some(x) = linalg::solve_unique(&a, &b)? else {
        return Ok(None);
    };
    let nonneg = x.iter().all(|c| *c.numer() >= 0);
    let integral = x.iter().all(Ratio::is_integer);
    let kind = match (nonneg, integral) {
        (true, true) => SolutionKind::NonnegInteger,
        (true, false) => SolutionKind::NonnegRational,
        (false, _) => SolutionKind::MixedSign,
    };
    Ok(Some(Solution { coeffs: x, kind }))
}

/// Searches for nonnegative integers `c` with `Σ c_i·family_i = f`. Unlike
/// [`positivity_solve`] the family may be linearly dependent, which is the
/// case for domino functions. Coefficients must be constant in `q` and the
/// family entrywise nonnegative. The search is exhaustive and deterministic:
/// it returns the lexicographically largest solution.
pub fn nonneg_integer_combination<K: Basis>(f: &QSym<K>, family: &[QSym<K>]) -> Result<Option<Vec<u64>>> {
    if let Some(b) = family.iter().find(|b| b.degree != f.degree) {
        return Err(Error::DegreeMismatch { left: f.degree, right: b.degree });
    }
    let target = f.constant_terms()?;
    let cols = family.iter().map(QSym::constant_terms).collect::<Result<Vec<_>>>()?;
    if cols.iter().flat_map(|c| c.values()).any(|&v| v < 0) {
        return Err(Error::InvalidQSym("family has a negative coefficient".into()));
    }
    let mut rows: Vec<K::Index> = target.keys().cloned().collect();
    for c in &cols {
        rows.extend(c.keys().cloned());
    }
    rows.sort();
    rows.dedup();
    let rem: Vec<i64> = rows.iter().map(|r| target.get(r).copied().unwrap_or(0)).collect();
    if rem.iter().any(|&v| v < 0) {
        return Ok(None);
    }
    let dense: Vec<Vec<i64>> =
        cols.iter().map(|c| rows.iter().map(|r| c.get(r).copied().unwrap_or(0)).collect()).collect();
    // covered[i][r]: some member at position ≥ i touches row r
    let mut covered = vec![vec![false; rows.len()]; family.len() + 1];
    for i in (0..family.len()).rev() {
        covered[i] = covered[i + 1].iter().zip(&dense[i]).map(|(&a, &b)| a || b > 0).collect();
    }

    fn search(i: usize, rem: &mut [i64], dense: &[Vec<i64>], covered: &[Vec<bool>], out: &mut Vec<u64>) -> bool {
        if rem.iter().zip(&covered[i]).any(|(&v, &c)| v > 0 && !c) {
            return false;
        }
        if i == dense.len() {
            return true;
        }
        let col = &dense[i];
        let bound = col.iter().zip(rem.iter()).filter(|(&b, _)| b > 0).map(|(&b, &r)| r / b).min().unwrap_or(0);
        for c in (0..=bound).rev() {
            for (r, &b) in rem.iter_mut().zip(col) {
                *r -= c * b;
            }
            out.push(c as u64);
            if search(i + 1, rem, dense, covered, out) {
                return true;
            }
            out.pop();
            for (r, &b) in rem.iter_mut().zip(col) {
                *r += c * b;
            }
        }
        false
    }

    let mut rem = rem;
    let mut out = Vec::with_capacity(family.len());
    Ok(search(0, &mut rem, &dense, &covered, &mut out).then_some(out))
}
