//! Partition-indexed matrices and symmetric function expansions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::involution::{type_census, TypeCensus};
use crate::partitions::{enumerate_partitions, Partition};
use crate::scalar::Coefficient;
use crate::tableaux::{count_ssyt, enumerate_srht};

/// A square matrix with rows and columns indexed by the partitions of `n`
/// in reverse-lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionMatrix<T> {
    n: usize,
    order: Vec<Partition>,
    index: BTreeMap<Partition, usize>,
    entries: Vec<T>,
}

impl<T: Coefficient> PartitionMatrix<T> {
    pub fn from_fn(n: usize, mut f: impl FnMut(&Partition, &Partition) -> T) -> Self {
        let order = enumerate_partitions(n);
        let index = order.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut entries = Vec::with_capacity(order.len() * order.len());
        for row in &order {
            for col in &order {
                entries.push(f(row, col));
            }
        }
        PartitionMatrix {
            n,
            order,
            index,
            entries,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |a, b| if a == b { T::one() } else { T::zero() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> &[Partition] {
        &self.order
    }

    pub fn dim(&self) -> usize {
        self.order.len()
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn at(&self, row: usize, col: usize) -> &T {
        &self.entries[row * self.dim() + col]
    }

    /// Entry at `(row, col)`; panics if either is not a partition of `n`.
    pub fn get(&self, row: &Partition, col: &Partition) -> &T {
        let i = self.index_of(row).expect("row partition of n");
        let j = self.index_of(col).expect("column partition of n");
        self.at(i, j)
    }

    pub fn set(&mut self, row: usize, col: usize, value: T) {
        let d = self.dim();
        self.entries[row * d + col] = value;
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// Ones on the diagonal and zeros below it.
    pub fn is_upper_unitriangular(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| self.at(i, i).is_one() && (0..i).all(|j| self.at(i, j).is_zero()))
    }

    pub fn is_lower_unitriangular(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| self.at(i, i).is_one() && (i + 1..d).all(|j| self.at(i, j).is_zero()))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |a, b| self.get(b, a).clone())
    }

    /// Exact product; both factors must have the same weight.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::InvalidPartition(format!(
                "cannot multiply matrices of weights {} and {}",
                self.n, other.n
            )));
        }
        let d = self.dim();
        let mut out = Self::from_fn(self.n, |_, _| T::zero());
        for i in 0..d {
            for k in 0..d {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        let v = out.at(i, j).clone() + a.clone() * b.clone();
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// CSV with partition labels as the header row and first column.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("\"\"");
        for p in &self.order {
            out.push_str(&format!(",\"{p}\""));
        }
        out.push('\n');
        for (i, p) in self.order.iter().enumerate() {
            out.push_str(&format!("\"{p}\""));
            for j in 0..self.dim() {
                out.push_str(&format!(",{}", self.at(i, j)));
            }
            out.push('\n');
        }
        out
    }

    /// Aligned text table with partition labels.
    pub fn to_text(&self) -> String {
        let labels: Vec<String> = self.order.iter().map(ToString::to_string).collect();
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let label_w = labels.iter().map(String::len).max().unwrap_or(0);
        let col_w = cells
            .iter()
            .chain(labels.iter())
            .map(String::len)
            .max()
            .unwrap_or(1);
        let mut out = format!("{:label_w$}", "");
        for l in &labels {
            out.push_str(&format!(" {l:>col_w$}"));
        }
        out.push('\n');
        for (i, l) in labels.iter().enumerate() {
            out.push_str(&format!("{l:<label_w$}"));
            for j in 0..self.dim() {
                out.push_str(&format!(" {:>col_w$}", cells[i * self.dim() + j]));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Vec<Value>> = (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| coeff_to_json(self.at(i, j))).collect())
            .collect();
        json!({
            "n": self.n,
            "order": self.order,
            "entries": rows,
        })
    }
}

impl<T: Coefficient> Mul for &PartitionMatrix<T> {
    type Output = PartitionMatrix<T>;

    fn mul(self, rhs: Self) -> PartitionMatrix<T> {
        self.try_mul(rhs).expect("matrices of equal weight")
    }
}

/// The Kostka matrix: entry `(λ, μ)` counts semistandard tableaux of shape
/// `λ` and content `μ`.
pub fn kostka_matrix<T: Coefficient>(n: usize) -> PartitionMatrix<T> {
    PartitionMatrix::from_fn(n, |shape, content| T::from_count(count_ssyt(shape, content)))
}

/// `K^{-1}` with entry `(μ, λ)` the signed count of special rim-hook
/// tableaux of shape `λ` and type `μ`.
pub fn inverse_kostka_matrix<T: Coefficient>(n: usize) -> PartitionMatrix<T> {
    PartitionMatrix::from_fn(n, |hook_type, shape| {
        enumerate_srht(shape, hook_type)
            .iter()
            .fold(T::zero(), |acc, s| acc + T::from_sign(s.sign()))
    })
}

/// Result of checking `K K^{-1} = I` and `K^{-1} K = I` for one weight.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub n: usize,
    pub kostka_times_inverse_is_identity: bool,
    pub inverse_times_kostka_is_identity: bool,
    /// One row per type `μ`: the cancellation in column `(1^n)` of `K^{-1} K`.
    pub last_column: Vec<LastColumnRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LastColumnRow {
    /// Entry `(μ, (1^n))` of `K^{-1} K`, from the matrices.
    pub inner_product: String,
    #[serde(flatten)]
    pub census: TypeCensus,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.kostka_times_inverse_is_identity
            && self.inverse_times_kostka_is_identity
            && self.last_column.iter().all(|row| {
                let expected = i64::from(row.census.hook_type == Partition::column(self.n));
                row.census.failures.is_empty()
                    && row.census.signed_sum == expected
                    && row.inner_product == expected.to_string()
            })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "n = {}\nK * K^-1 = I: {}\nK^-1 * K = I: {}\nlast column (1^{}):\n",
            self.n,
            self.kostka_times_inverse_is_identity,
            self.inverse_times_kostka_is_identity,
            self.n
        );
        for row in &self.last_column {
            out.push_str(&format!(
                "  type {:<18} inner product {:>3}  pairs {:>5}  2-cycles {:>5}  fixed {:>2}  longest trace {:>3}  failures {}\n",
                row.census.hook_type.to_string(),
                row.inner_product,
                row.census.pairs,
                row.census.two_cycles,
                row.census.fixed_points,
                row.census.longest_trace,
                row.census.failures.len()
            ));
        }
        out
    }
}

/// Multiplies `K` and `K^{-1}` both ways and replays the pair involution
/// on every row of the last column.
pub fn verify_identities(n: usize) -> IdentityReport {
    let k = kostka_matrix::<crate::Integer>(n);
    let inv = inverse_kostka_matrix::<crate::Integer>(n);
    let left = &k * &inv;
    let right = &inv * &k;
    let column = Partition::column(n);
    let last_column = enumerate_partitions(n)
        .into_iter()
        .map(|mu| LastColumnRow {
            inner_product: right.get(&mu, &column).to_string(),
            census: type_census(&mu),
        })
        .collect();
    IdentityReport {
        n,
        kostka_times_inverse_is_identity: left.is_identity(),
        inverse_times_kostka_is_identity: right.is_identity(),
        last_column,
    }
}

/// Basis of an expansion: elementary, Schur or monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    E,
    S,
    M,
}

impl Basis {
    fn symbol(self) -> &'static str {
        match self {
            Basis::E => "e",
            Basis::S => "s",
            Basis::M => "m",
        }
    }
}

/// `Σ c_λ b_λ` over partitions `λ` of one weight, zero terms omitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFuncExpansion<T> {
    basis: Basis,
    weight: usize,
    coeffs: BTreeMap<Partition, T>,
}

impl<T: Coefficient> SymFuncExpansion<T> {
    pub fn zero(basis: Basis, weight: usize) -> Self {
        SymFuncExpansion {
            basis,
            weight,
            coeffs: BTreeMap::new(),
        }
    }

    /// A single basis element.
    pub fn basis_element(basis: Basis, index: Partition) -> Self {
        let mut f = Self::zero(basis, index.n());
        f.coeffs.insert(index, T::one());
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Adds `c · b_λ`; fails if `λ` has the wrong weight.
    pub fn add_term(&mut self, index: Partition, c: T) -> Result<()> {
        if index.n() != self.weight {
            return Err(Error::InvalidPartition(format!(
                "{index} does not have weight {}",
                self.weight
            )));
        }
        let sum = self.coeffs.get(&index).cloned().unwrap_or_else(T::zero) + c;
        if sum.is_zero() {
            self.coeffs.remove(&index);
        } else {
            self.coeffs.insert(index, sum);
        }
        Ok(())
    }

    pub fn coeff(&self, index: &Partition) -> T {
        self.coeffs.get(index).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &T)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// All coefficients non-negative.
    pub fn is_positive(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn scale(&self, k: &T) -> Self {
        let mut out = Self::zero(self.basis, self.weight);
        for (p, c) in &self.coeffs {
            out.add_term(p.clone(), c.clone() * k.clone()).expect("same weight");
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.basis != other.basis || self.weight != other.weight {
            return Err(Error::InvalidPartition("incompatible expansions".into()));
        }
        let mut out = self.clone();
        for (p, c) in &other.coeffs {
            out.add_term(p.clone(), c.clone())?;
        }
        Ok(out)
    }

    /// Product with `e_k`, for an expansion in the elementary basis.
    pub fn times_elementary(&self, k: usize) -> Result<Self> {
        if self.basis != Basis::E {
            return Err(Error::InvalidPartition("expected an e-expansion".into()));
        }
        let mut out = Self::zero(Basis::E, self.weight + k);
        for (p, c) in &self.coeffs {
            out.add_term(p.with_part(k), c.clone())?;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let coeffs: serde_json::Map<String, Value> = self
            .coeffs
            .iter()
            .map(|(p, c)| (p.to_string(), coeff_to_json(c)))
            .collect();
        json!({
            "basis": self.basis,
            "weight": self.weight,
            "coeffs": coeffs,
        })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let err = |reason: String| Error::Parse {
            what: "expansion",
            input: value.to_string(),
            reason,
        };
        let basis: Basis = serde_json::from_value(value["basis"].clone())
            .map_err(|e| err(format!("basis: {e}")))?;
        let coeffs = value["coeffs"]
            .as_object()
            .ok_or_else(|| err("missing coeffs".into()))?;
        let mut parsed = Vec::new();
        for (k, v) in coeffs {
            let index: Partition = k.parse()?;
            parsed.push((index, coeff_from_json::<T>(v).ok_or_else(|| err(format!("coefficient {v}")))?));
        }
        let weight = match value.get("weight").and_then(Value::as_u64) {
            Some(w) => w as usize,
            None => parsed.first().map(|(p, _)| p.n()).unwrap_or(0),
        };
        let mut out = Self::zero(basis, weight);
        for (p, c) in parsed {
            out.add_term(p, c)?;
        }
        Ok(out)
    }
}

fn coeff_to_json<T: Coefficient>(c: &T) -> Value {
    let text = c.to_string();
    match text.parse::<i64>() {
        Ok(v) => Value::from(v),
        Err(_) => Value::String(text),
    }
}

fn coeff_from_json<T: Coefficient>(v: &Value) -> Option<T> {
    match v {
        Value::Number(n) => n.to_string().parse().ok(),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

/// Terms in matrix order, e.g. `4 e[4] + 2 e[3,1] + 2 e[2,2]`.
impl<T: Coefficient> fmt::Display for SymFuncExpansion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let sym = self.basis.symbol();
        for (i, (p, c)) in self.coeffs.iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude} ")?;
            }
            write!(f, "{sym}{p}")?;
        }
        Ok(())
    }
}

/// The e-expansion of `s_{λ'}`, read from column `λ` of `K^{-1}`.
pub fn schur_to_e<T: Coefficient>(shape: &Partition) -> SymFuncExpansion<T> {
    schur_to_e_with(shape, &inverse_kostka_matrix(shape.n()))
}

/// [`schur_to_e`] with a precomputed inverse Kostka matrix of weight `|λ|`.
pub fn schur_to_e_with<T: Coefficient>(
    shape: &Partition,
    inverse: &PartitionMatrix<T>,
) -> SymFuncExpansion<T> {
    let mut out = SymFuncExpansion::zero(Basis::E, shape.n());
    for mu in inverse.order() {
        out.add_term(mu.clone(), inverse.get(mu, shape).clone())
            .expect("same weight");
    }
    out
}

/// Rewrites a Schur expansion in the elementary basis.
pub fn s_to_e<T: Coefficient>(f: &SymFuncExpansion<T>) -> Result<SymFuncExpansion<T>> {
    if f.basis != Basis::S {
        return Err(Error::InvalidPartition("expected an s-expansion".into()));
    }
    let inverse = inverse_kostka_matrix::<T>(f.weight);
    let mut out = SymFuncExpansion::zero(Basis::E, f.weight);
    for (nu, c) in &f.coeffs {
        out = out.add(&schur_to_e_with(&nu.conjugate(), &inverse).scale(c))?;
    }
    Ok(out)
}

fn binomial<T: Coefficient>(k: usize, r: usize) -> T {
    if r > k {
        return T::zero();
    }
    let mut acc = T::one();
    for i in 1..=r {
        acc = acc * T::from_count(k - r + i) / T::from_count(i);
    }
    acc
}

/// `f(1^k)`: the value with `k` variables set to one and the rest to zero.
pub fn evaluate_at_ones<T: Coefficient>(f: &SymFuncExpansion<T>, k: usize) -> T {
    match f.basis {
        Basis::E => f.coeffs.iter().fold(T::zero(), |acc, (mu, c)| {
            let value = mu
                .parts()
                .iter()
                .fold(T::one(), |v, &part| v * binomial::<T>(k, part));
            acc + c.clone() * value
        }),
        Basis::M => f.coeffs.iter().fold(T::zero(), |acc, (mu, c)| {
            if mu.len() > k {
                return acc;
            }
            // k! / ((k - l)! Π m_j!) placements of the parts into k slots.
            let mut value = T::one();
            for i in 0..mu.len() {
                value = value * T::from_count(k - i);
            }
            for m in mu.multiplicities() {
                for i in 1..=m {
                    value = value / T::from_count(i);
                }
            }
            acc + c.clone() * value
        }),
        Basis::S => evaluate_at_ones(&s_to_e(f).expect("s basis"), k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_kostka_matrices() {
        assert!(kostka_matrix::<i64>(1).is_identity());
        let k3 = kostka_matrix::<i64>(3);
        assert_eq!(*k3.get(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert!(k3.is_upper_unitriangular());
        let inv0 = inverse_kostka_matrix::<BigInt>(0);
        assert_eq!(inv0.dim(), 1);
        assert!(inv0.is_identity());
    }

    #[test]
    fn last_row_of_inverse_is_indicator() {
        for n in 1..=6 {
            let inv = inverse_kostka_matrix::<i64>(n);
            let col = Partition::column(n);
            for lam in inv.order() {
                let expected = i64::from(*lam == col);
                assert_eq!(*inv.get(&col, lam), expected);
            }
        }
    }

    #[test]
    fn expansion_display_and_json() {
        let mut f = SymFuncExpansion::<BigInt>::zero(Basis::E, 4);
        f.add_term(p(&[2, 2]), BigInt::from(2)).unwrap();
        f.add_term(p(&[4]), BigInt::from(4)).unwrap();
        f.add_term(p(&[3, 1]), BigInt::from(2)).unwrap();
        assert_eq!(f.to_string(), "4 e[4] + 2 e[3,1] + 2 e[2,2]");
        let json = f.to_json();
        assert_eq!(json["coeffs"]["[2,2]"], 2);
        assert_eq!(json["basis"], "e");
        assert_eq!(SymFuncExpansion::<BigInt>::from_json(&json).unwrap(), f);
        f.add_term(p(&[4]), BigInt::from(-5)).unwrap();
        assert_eq!(f.to_string(), "-e[4] + 2 e[3,1] + 2 e[2,2]");
        f.add_term(p(&[4]), BigInt::from(1)).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.add_term(p(&[3]), BigInt::from(1)).is_err());
        assert_eq!(SymFuncExpansion::<i64>::zero(Basis::S, 3).to_string(), "0");
    }

    #[test]
    fn evaluations() {
        for k in 0..8 {
            let e2 = SymFuncExpansion::<i64>::basis_element(Basis::E, p(&[2]));
            assert_eq!(evaluate_at_ones(&e2, k), (k * k.saturating_sub(1) / 2) as i64);
        }
        let m21 = SymFuncExpansion::<i64>::basis_element(Basis::M, p(&[2, 1]));
        // x1^2 x2 + x1 x2^2 + ... : k(k-1) terms.
        assert_eq!(evaluate_at_ones(&m21, 3), 6);
        let m111 = SymFuncExpansion::<i64>::basis_element(Basis::M, p(&[1, 1, 1]));
        assert_eq!(evaluate_at_ones(&m111, 4), 4);
        let s1 = schur_to_e::<i64>(&p(&[1]));
        assert_eq!(s1, SymFuncExpansion::basis_element(Basis::E, p(&[1])));
    }

    #[test]
    fn schur_of_a_column_is_elementary() {
        // s_{(1^n)} = e_n, read from column (n) of K^{-1}.
        for n in 1..=6 {
            let f = schur_to_e::<i64>(&Partition::row(n));
            assert_eq!(f, SymFuncExpansion::basis_element(Basis::E, Partition::row(n)));
        }
    }

    #[test]
    fn times_elementary_appends_a_part() {
        let mut f = SymFuncExpansion::<i64>::zero(Basis::E, 3);
        f.add_term(p(&[2, 1]), 3).unwrap();
        let g = f.times_elementary(1).unwrap();
        assert_eq!(g.coeff(&p(&[2, 1, 1])), 3);
        assert_eq!(g.weight(), 4);
    }
}
