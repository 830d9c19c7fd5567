//! Exact linear algebra over the rationals and small prime fields.
//!
//! Everything downstream (cochain complexes, spectral sequence pages,
//! resolutions) reduces to ranks, kernels and quotient bases of small dense
//! matrices, so this module keeps a single dense representation and a single
//! deterministic row-reduction routine. Pivots are always taken as the first
//! nonzero entry scanning columns left to right and rows top to bottom, which
//! makes every basis this module returns reproducible.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Largest modulus accepted for prime fields. Keeps products inside `u64`.
pub const MAX_PRIME: u64 = 1 << 32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("entry {entry} cannot be reduced into {field}")]
    ModulusMismatch { entry: String, field: Field },
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("cannot parse field selector `{0}` (expected `q` or `p:<prime>`)")]
    BadField(String),
    #[error("cannot parse scalar `{0}`")]
    BadScalar(String),
}

pub type Result<T> = std::result::Result<T, LinalgError>;

/// Coefficient field: the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if (2..MAX_PRIME).contains(&p) && is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(LinalgError::NotPrime(p))
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::zero()),
            Field::Prime(_) => Scalar::Mod(0),
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Mod(v.rem_euclid(p as i64) as u64),
        }
    }

    pub fn from_bigint(self, v: &BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => Scalar::Mod(v.mod_floor(&BigInt::from(p)).to_u64().unwrap()),
        }
    }

    /// Brings a scalar into canonical form for this field.
    pub fn reduce(self, s: &Scalar) -> Result<Scalar> {
        match (self, s) {
            (Field::Rational, Scalar::Rational(_)) => Ok(s.clone()),
            (Field::Prime(p), Scalar::Mod(v)) if *v < p => Ok(s.clone()),
            (Field::Prime(p), Scalar::Rational(r)) => {
                let pb = BigInt::from(p);
                let den = r.denom().mod_floor(&pb).to_u64().unwrap();
                if den == 0 {
                    return Err(LinalgError::ModulusMismatch { entry: s.to_string(), field: self });
                }
                let num = r.numer().mod_floor(&pb).to_u64().unwrap();
                Ok(Scalar::Mod(mul_mod(num, inv_mod(den, p), p)))
            }
            _ => Err(LinalgError::ModulusMismatch { entry: s.to_string(), field: self }),
        }
    }

    pub fn add(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rational, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod((x + y) % p),
            _ => mixed(self, a, b),
        }
    }

    pub fn sub(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rational, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x - y),
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod((x + p - y) % p),
            _ => mixed(self, a, b),
        }
    }

    pub fn mul(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rational, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod(mul_mod(*x, *y, p)),
            _ => mixed(self, a, b),
        }
    }

    pub fn neg(self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Rational, Scalar::Rational(x)) => Scalar::Rational(-x),
            (Field::Prime(p), Scalar::Mod(x)) => Scalar::Mod((p - x) % p),
            _ => mixed(self, a, a),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: &Scalar) -> Scalar {
        assert!(!a.is_zero(), "inverse of zero");
        match (self, a) {
            (Field::Rational, Scalar::Rational(x)) => Scalar::Rational(x.recip()),
            (Field::Prime(p), Scalar::Mod(x)) => Scalar::Mod(inv_mod(*x, p)),
            _ => mixed(self, a, a),
        }
    }

    /// `a - c * b`, the row-operation kernel.
    fn sub_mul(self, a: &Scalar, c: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, c, b) {
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y), Scalar::Mod(z)) => {
                Scalar::Mod((x + p - mul_mod(*y, *z, p)) % p)
            }
            _ => self.sub(a, &self.mul(c, b)),
        }
    }
}

fn mixed(f: Field, a: &Scalar, b: &Scalar) -> Scalar {
    panic!("scalars {a} and {b} do not both belong to {f}")
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Prime(p) => write!(f, "p:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = LinalgError;

    fn from_str(s: &str) -> Result<Field> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(Field::Rational);
        }
        let p = t
            .strip_prefix("p:")
            .and_then(|rest| rest.parse::<u64>().ok())
            .ok_or_else(|| LinalgError::BadField(s.to_string()))?;
        Field::prime(p)
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Field, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2)
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// A field element. The variant must agree with the [`Field`] it is used with.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod(u64),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Mod(v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Mod(v) => *v == 1,
        }
    }

    /// Sign of a rational scalar; prime-field scalars report +1 when nonzero.
    pub fn signum(&self) -> i32 {
        match self {
            Scalar::Rational(r) if r.is_negative() => -1,
            s if s.is_zero() => 0,
            _ => 1,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Mod(v) => write!(f, "{v}"),
        }
    }
}

impl FromStr for Scalar {
    type Err = LinalgError;

    /// Parses `a` or `a/b` as a rational. Use [`Field::reduce`] to move it into a prime field.
    fn from_str(s: &str) -> Result<Scalar> {
        let bad = || LinalgError::BadScalar(s.to_string());
        let t = s.trim();
        let r = match t.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(t.parse().map_err(|_| bad())?),
        };
        Ok(Scalar::Rational(r))
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Scalar, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub type Vector = Vec<Scalar>;

/// Dense matrix over a fixed field, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Mat {
        Mat { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_i64(field: Field, rows: usize, cols: usize, entries: &[i64]) -> Result<Mat> {
        if entries.len() != rows * cols {
            return Err(LinalgError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let data = entries.iter().map(|&v| field.from_i64(v)).collect();
        Ok(Mat { field, rows, cols, data })
    }

    /// Builds a matrix from arbitrary scalars, reducing each into `field`.
    pub fn from_scalars(field: Field, rows: usize, cols: usize, entries: &[Scalar]) -> Result<Mat> {
        if entries.len() != rows * cols {
            return Err(LinalgError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let data = entries.iter().map(|s| field.reduce(s)).collect::<Result<_>>()?;
        Ok(Mat { field, rows, cols, data })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vector]) -> Mat {
        let mut m = Mat::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Re-expresses the matrix over another field.
    pub fn reduce_into(&self, field: Field) -> Result<Mat> {
        if field == self.field {
            return Ok(self.clone());
        }
        if self.field != Field::Rational {
            return Err(LinalgError::ModulusMismatch {
                entry: format!("matrix over {}", self.field),
                field,
            });
        }
        Mat::from_scalars(field, self.rows, self.cols, &self.data)
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "product shape");
        assert_eq!(self.field, other.field, "product field");
        let f = self.field;
        let mut out = Mat::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j);
                    let next = f.add(cur, &f.mul(a, b));
                    out.set(i, j, next);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "vector length");
        let f = self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = f.add(&acc, &f.mul(a, b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "sum shape");
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Mat { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        let f = self.field;
        let data = self.data.iter().map(|a| f.mul(a, c)).collect();
        Mat { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Mat {
        let mut out = Mat::zeros(self.field, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }
}

/// Reduced row echelon form together with the pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rref: Mat,
    pub pivots: Vec<usize>,
}

/// Row-reduces a copy of `m`. Pivots are chosen as the first nonzero entry in
/// column order.
pub fn echelon(m: &Mat) -> Echelon {
    let f = m.field;
    let (rows, cols) = (m.rows, m.cols);
    let mut data: Vec<Vec<Scalar>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !data[i][c].is_zero()) else {
            continue;
        };
        data.swap(r, pr);
        let inv = f.inv(&data[r][c]);
        if !inv.is_one() {
            for x in data[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x = f.mul(x, &inv);
                }
            }
        }
        let support: Vec<usize> = (c..cols).filter(|&j| !data[r][j].is_zero()).collect();
        let pivot_row = std::mem::take(&mut data[r]);
        for (i, row) in data.iter_mut().enumerate() {
            if i == r || row.is_empty() || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for &j in &support {
                row[j] = f.sub_mul(&row[j], &factor, &pivot_row[j]);
            }
        }
        data[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    let rref = Mat { field: f, rows, cols, data: data.into_iter().flatten().collect() };
    Echelon { rref, pivots }
}

fn in_field(m: &Mat, f: Field) -> Result<std::borrow::Cow<'_, Mat>> {
    if m.field == f {
        Ok(std::borrow::Cow::Borrowed(m))
    } else {
        m.reduce_into(f).map(std::borrow::Cow::Owned)
    }
}

pub fn rank(m: &Mat, f: Field) -> Result<usize> {
    let m = in_field(m, f)?;
    if m.rows == 0 || m.cols == 0 {
        return Ok(0);
    }
    Ok(echelon(&m).pivots.len())
}

/// Basis of the null space, one vector per free column (in column order).
pub fn kernel_basis(m: &Mat, f: Field) -> Result<Vec<Vector>> {
    let m = in_field(m, f)?;
    let e = echelon(&m);
    let mut is_pivot = vec![false; m.cols];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    let basis = (0..m.cols)
        .filter(|&j| !is_pivot[j])
        .map(|free| {
            let mut v = vec![f.zero(); m.cols];
            v[free] = f.one();
            for (i, &p) in e.pivots.iter().enumerate() {
                let x = e.rref.get(i, free);
                if !x.is_zero() {
                    v[p] = f.neg(x);
                }
            }
            v
        })
        .collect();
    Ok(basis)
}

/// The pivot columns of `m` itself, which span its column space.
pub fn image_basis(m: &Mat, f: Field) -> Result<Vec<Vector>> {
    let m = in_field(m, f)?;
    let e = echelon(&m);
    Ok(e.pivots.iter().map(|&j| m.column(j)).collect())
}

/// Finds `c` with `sum c_i * generators_i = target`, or `None` when `target` is
/// outside the span. When the generators are dependent the free coefficients are 0.
pub fn solve_in_subspace(
    target: &[Scalar],
    generators: &[Vector],
    f: Field,
) -> Result<Option<Vector>> {
    let n = target.len();
    if let Some(g) = generators.iter().find(|g| g.len() != n) {
        return Err(LinalgError::Shape(format!("generator of length {} vs target {n}", g.len())));
    }
    let mut cols: Vec<Vector> = generators
        .iter()
        .map(|g| g.iter().map(|s| f.reduce(s)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    cols.push(target.iter().map(|s| f.reduce(s)).collect::<Result<Vec<_>>>()?);
    let m = Mat::from_columns(f, n, &cols);
    let e = echelon(&m);
    let last = generators.len();
    if e.pivots.last() == Some(&last) {
        return Ok(None);
    }
    let mut c = vec![f.zero(); last];
    for (i, &p) in e.pivots.iter().enumerate() {
        c[p] = e.rref.get(i, last).clone();
    }
    Ok(Some(c))
}

/// Determinant of a square matrix by elimination.
pub fn determinant(m: &Mat) -> Scalar {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let f = m.field;
    let n = m.rows;
    let mut a: Vec<Vec<Scalar>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut det = f.one();
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return f.zero();
        };
        if pr != c {
            a.swap(pr, c);
            det = f.neg(&det);
        }
        det = f.mul(&det, &a[c][c]);
        let inv = f.inv(&a[c][c]);
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let factor = f.mul(&a[i][c], &inv);
            for j in c..n {
                let v = f.sub_mul(&a[i][j], &factor, &a[c][j]);
                a[i][j] = v;
            }
        }
    }
    det
}

/// Indices of those `candidates` that, added in order, extend `base` to a basis
/// of `span(base ∪ candidates)`.
pub fn complement_indices(base: &[Vector], candidates: &[Vector], dim: usize, f: Field) -> Vec<usize> {
    let mut cols: Vec<Vector> = base.to_vec();
    cols.extend(candidates.iter().cloned());
    if cols.is_empty() || dim == 0 {
        return Vec::new();
    }
    let e = echelon(&Mat::from_columns(f, dim, &cols));
    e.pivots.iter().filter(|&&p| p >= base.len()).map(|&p| p - base.len()).collect()
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    #[test]
    fn identity_rank() {
        assert_eq!(rank(&Mat::identity(Q, 2), Q).unwrap(), 2);
    }

    #[test]
    fn characteristic_two_collapse() {
        let m = Mat::from_i64(Q, 1, 1, &[2]).unwrap();
        assert_eq!(rank(&m, f2()).unwrap(), 0);
        assert_eq!(rank(&m, Q).unwrap(), 1);
    }

    #[test]
    fn hollow_triangle_edge_boundary() {
        // rows: vertices 1,2,3; columns: edges 12, 13, 23
        let m = Mat::from_i64(Q, 3, 3, &[-1, -1, 0, 1, 0, -1, 0, 1, 1]).unwrap();
        assert_eq!(rank(&m, Q).unwrap(), 2);
        assert_eq!(rank(&m, f2()).unwrap(), 2);
    }

    #[test]
    fn zero_map_kernel() {
        let m = Mat::zeros(Q, 2, 3);
        assert_eq!(kernel_basis(&m, Q).unwrap().len(), 3);
        assert!(image_basis(&m, Q).unwrap().is_empty());
    }

    #[test]
    fn kernel_over_f2() {
        let m = Mat::from_i64(f2(), 1, 2, &[1, 1]).unwrap();
        let k = kernel_basis(&m, f2()).unwrap();
        assert_eq!(k, vec![vec![Scalar::Mod(1), Scalar::Mod(1)]]);
    }

    #[test]
    fn three_ray_sum_map_kernel() {
        // k^3 -> k, (x, y, z) -> x - y + z
        let m = Mat::from_i64(Q, 1, 3, &[1, -1, 1]).unwrap();
        let k = kernel_basis(&m, Q).unwrap();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(is_zero_vec(&m.mul_vec(v)));
        }
    }

    #[test]
    fn image_of_rank_one() {
        let m = Mat::from_i64(Q, 2, 2, &[1, 2, 2, 4]).unwrap();
        let im = image_basis(&m, Q).unwrap();
        assert_eq!(im, vec![vec![Q.from_i64(1), Q.from_i64(2)]]);
        let id = image_basis(&Mat::identity(Q, 2), Q).unwrap();
        assert_eq!(id, vec![vec![Q.one(), Q.zero()], vec![Q.zero(), Q.one()]]);
    }

    #[test]
    fn solve_cases() {
        let g = vec![Q.from_i64(1), Q.from_i64(2)];
        let c = solve_in_subspace(&g, &[g.clone()], Q).unwrap().unwrap();
        assert_eq!(c, vec![Q.one()]);
        let outside = vec![Q.from_i64(1), Q.from_i64(0)];
        assert_eq!(solve_in_subspace(&outside, &[g], Q).unwrap(), None);
    }

    #[test]
    fn cohomology_class_reduction_in_hollow_triangle() {
        // degree-1 cochains of the hollow triangle's cone complex: edges 12, 13, 23.
        // Coboundary of the vertices spans {(-1,-1,0),(1,0,-1),(0,1,1)} (rank 2).
        // The top-degree class is represented by edge 23; expressing edge 12 in
        // terms of [rep, coboundaries] must give a unique rep-coefficient.
        let cob = [
            vec![Q.from_i64(-1), Q.from_i64(-1), Q.from_i64(0)],
            vec![Q.from_i64(1), Q.from_i64(0), Q.from_i64(-1)],
        ];
        let rep = vec![Q.zero(), Q.zero(), Q.one()];
        let mut gens = vec![rep];
        gens.extend(cob.iter().cloned());
        let target = vec![Q.one(), Q.zero(), Q.zero()];
        let c = solve_in_subspace(&target, &gens, Q).unwrap().unwrap();
        // by hand: e12 = e23 + (1,0,-1)
        let mut sum = vec![Q.zero(); 3];
        for (ci, g) in c.iter().zip(&gens) {
            for (s, x) in sum.iter_mut().zip(g) {
                *s = Q.add(s, &Q.mul(ci, x));
            }
        }
        assert_eq!(sum, target);
        assert_eq!(c, vec![Q.one(), Q.zero(), Q.one()]);
    }

    #[test]
    fn modulus_mismatch() {
        let half: Scalar = "1/2".parse().unwrap();
        let m = Mat::from_scalars(Q, 1, 1, &[half]).unwrap();
        assert!(matches!(rank(&m, f2()), Err(LinalgError::ModulusMismatch { .. })));
        let over_f3 = Mat::identity(Field::prime(3).unwrap(), 1);
        assert!(rank(&over_f3, Q).is_err());
        assert_eq!(rank(&m, Field::prime(3).unwrap()).unwrap(), 1);
    }

    #[test]
    fn determinant_signs() {
        let m = Mat::from_i64(Q, 2, 2, &[0, 1, 1, 0]).unwrap();
        assert_eq!(determinant(&m), Q.from_i64(-1));
        let m = Mat::from_i64(Q, 3, 3, &[2, 0, 1, 1, 3, 2, 1, 1, 1]).unwrap();
        // 2(3-2) - 0 + 1(1-3) = 0
        assert!(determinant(&m).is_zero());
        assert_eq!(determinant(&Mat::identity(Q, 0)), Q.one());
    }

    #[test]
    fn field_parsing() {
        assert_eq!("q".parse::<Field>().unwrap(), Q);
        assert_eq!("p:5".parse::<Field>().unwrap(), Field::Prime(5));
        assert!("p:4".parse::<Field>().is_err());
        assert!("r".parse::<Field>().is_err());
    }
}
