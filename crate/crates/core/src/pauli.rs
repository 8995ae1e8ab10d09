//! GF(8) arithmetic, Hermitian multi-qubit Pauli operators and qutrit
//! Weyl–Heisenberg displacements.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::numerics::{c, ComplexMatrix};

/// Reduction polynomial `x^3 + x + 1`.
pub const GF8_MODULUS: u8 = 0b1011;

/// Element of GF(8) stored as polynomial coordinates over GF(2): bit `k`
/// is the coefficient of `x^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf8(u8);

impl Gf8 {
    pub const ZERO: Gf8 = Gf8(0);
    pub const ONE: Gf8 = Gf8(1);
    /// The polynomial `x`, a generator of the multiplicative group.
    pub const X: Gf8 = Gf8(2);

    pub fn new(bits: u8) -> Result<Self> {
        if bits >= 8 {
            return Err(Error::Parse(format!("{bits} is not a GF(8) element")));
        }
        Ok(Gf8(bits))
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = Gf8> {
        (0..8).map(Gf8)
    }

    pub fn nonzero() -> impl Iterator<Item = Gf8> {
        (1..8).map(Gf8)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn pow(self, mut e: u32) -> Gf8 {
        let mut base = self;
        let mut acc = Gf8::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(self) -> Option<Gf8> {
        if self.is_zero() {
            None
        } else {
            Some(self.pow(6))
        }
    }

    /// Absolute trace `x + x^2 + x^4`, always 0 or 1.
    pub fn trace(self) -> u8 {
        let x2 = self * self;
        let x4 = x2 * x2;
        let t = (self + x2 + x4).0;
        debug_assert!(t <= 1);
        t
    }
}

impl fmt::Display for Gf8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:03b}", self.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for Gf8 {
    type Output = Gf8;

    fn add(self, other: Gf8) -> Gf8 {
        Gf8(self.0 ^ other.0)
    }
}

impl Mul for Gf8 {
    type Output = Gf8;

    fn mul(self, other: Gf8) -> Gf8 {
        gf8_mul(self, other)
    }
}

/// Carry-less product reduced modulo [`GF8_MODULUS`].
pub fn gf8_mul(x: Gf8, y: Gf8) -> Gf8 {
    let mut prod: u8 = 0;
    for k in 0..3 {
        if (y.0 >> k) & 1 == 1 {
            prod ^= x.0 << k;
        }
    }
    for k in (3..5).rev() {
        if (prod >> k) & 1 == 1 {
            prod ^= GF8_MODULUS << (k - 3);
        }
    }
    Gf8(prod)
}

/// First ordered basis `(e0, e1, e2)` of GF(8) over GF(2), in lexicographic
/// order of element bits, with `Tr(e_i e_j) = delta_ij`.
pub fn self_dual_basis() -> [Gf8; 3] {
    static BASIS: OnceLock<[Gf8; 3]> = OnceLock::new();
    *BASIS.get_or_init(|| {
        for e0 in Gf8::nonzero() {
            for e1 in Gf8::nonzero() {
                for e2 in Gf8::nonzero() {
                    let e = [e0, e1, e2];
                    let ok = (0..3).all(|i| {
                        (0..3).all(|j| (e[i] * e[j]).trace() == u8::from(i == j))
                    });
                    if ok {
                        return e;
                    }
                }
            }
        }
        unreachable!("GF(8) has a self-dual basis")
    })
}

/// Coordinates of `x` in the self-dual basis packed as a 3-qubit bit
/// string: coordinate `i` (= `Tr(x e_i)`) lands on qubit `i`.
pub fn gf8_to_qubit_bits(x: Gf8) -> u32 {
    let basis = self_dual_basis();
    let mut bits = 0u32;
    for (i, e) in basis.iter().enumerate() {
        bits |= u32::from((x * *e).trace()) << (2 - i);
    }
    bits
}

/// Maximum qubit count accepted by [`pauli_matrix`].
pub const MAX_QUBITS: usize = 4;

/// Hermitian `n`-qubit Pauli operator labelled by an X-part `a` and a
/// Z-part `b`. Qubit 0 is the leftmost tensor factor and the most
/// significant bit of each part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliLabel {
    n: usize,
    a: u32,
    b: u32,
}

impl PauliLabel {
    pub fn new(n: usize, a: u32, b: u32) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::DimensionTooLarge {
                dim: n,
                max: MAX_QUBITS,
            });
        }
        let mask = (1u32 << n) - 1;
        if a & !mask != 0 || b & !mask != 0 {
            return Err(Error::Parse(format!(
                "label bits ({a:b}, {b:b}) exceed {n} qubits"
            )));
        }
        Ok(Self { n, a, b })
    }

    /// Parses bit strings such as `("100", "001")`.
    pub fn from_bits(a: &str, b: &str) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::DimensionMismatch {
                expected: a.len(),
                found: b.len(),
            });
        }
        let parse = |s: &str| {
            u32::from_str_radix(s, 2).map_err(|e| Error::Parse(format!("bad bit string {s:?}: {e}")))
        };
        Self::new(a.len(), parse(a)?, parse(b)?)
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, 0, 0)
    }

    /// Inverse of [`PauliLabel::index`].
    pub fn from_index(n: usize, index: usize) -> Result<Self> {
        let mask = (1usize << n) - 1;
        Self::new(n, ((index >> n) & mask) as u32, (index & mask) as u32)
    }

    /// All `4^n` labels in index order.
    pub fn all(n: usize) -> Result<Vec<Self>> {
        (0..1usize << (2 * n)).map(|i| Self::from_index(n, i)).collect()
    }

    pub fn qubits(&self) -> usize {
        self.n
    }

    pub fn x_part(&self) -> u32 {
        self.a
    }

    pub fn z_part(&self) -> u32 {
        self.b
    }

    /// The integer whose binary expansion is `a` followed by `b`.
    pub fn index(&self) -> usize {
        ((self.a as usize) << self.n) | self.b as usize
    }

    pub fn is_identity(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// `(a_i, b_i)` for qubit `i`.
    pub fn qubit(&self, i: usize) -> (bool, bool) {
        let shift = self.n - 1 - i;
        ((self.a >> shift) & 1 == 1, (self.b >> shift) & 1 == 1)
    }
}

impl fmt::Display for PauliLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let ch = match self.qubit(i) {
                (false, false) => 'I',
                (true, false) => 'X',
                (false, true) => 'Z',
                (true, true) => 'Y',
            };
            write!(f, "{ch}")?;
        }
        Ok(())
    }
}

fn single_qubit(x: bool, z: bool) -> ComplexMatrix {
    let o = c(0.0, 0.0);
    let rows = match (x, z) {
        (false, false) => [[c(1.0, 0.0), o], [o, c(1.0, 0.0)]],
        (true, false) => [[o, c(1.0, 0.0)], [c(1.0, 0.0), o]],
        (false, true) => [[c(1.0, 0.0), o], [o, c(-1.0, 0.0)]],
        (true, true) => [[o, c(0.0, -1.0)], [c(0.0, 1.0), o]],
    };
    ComplexMatrix::from_fn(2, |i, j| rows[i][j])
}

/// Tensor product of I, X, Z, Y factors, with Y the standard Hermitian
/// matrix `[[0, -i], [i, 0]]`.
pub fn pauli_matrix(label: &PauliLabel) -> Result<ComplexMatrix> {
    if label.n > MAX_QUBITS {
        return Err(Error::DimensionTooLarge {
            dim: label.n,
            max: MAX_QUBITS,
        });
    }
    let mut m = ComplexMatrix::identity(1);
    for i in 0..label.n {
        let (x, z) = label.qubit(i);
        m = m.kron(&single_qubit(x, z));
    }
    Ok(m)
}

/// Symplectic commutation test: `a.b' + a'.b = 0 (mod 2)`.
pub fn pauli_commutes(p: &PauliLabel, q: &PauliLabel) -> Result<bool> {
    if p.n != q.n {
        return Err(Error::DimensionMismatch {
            expected: p.n,
            found: q.n,
        });
    }
    let form = (p.a & q.b).count_ones() + (q.a & p.b).count_ones();
    Ok(form.is_multiple_of(2))
}

/// Label of a qutrit displacement `X^a Z^b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QutritWHLabel {
    a: u8,
    b: u8,
}

impl QutritWHLabel {
    pub fn new(a: u8, b: u8) -> Result<Self> {
        if a >= 3 || b >= 3 {
            return Err(Error::Parse(format!("({a}, {b}) is not a pair of trits")));
        }
        Ok(Self { a, b })
    }

    /// All nine labels ordered by `3a + b`.
    pub fn all() -> Vec<Self> {
        (0..3)
            .flat_map(|a| (0..3).map(move |b| Self { a, b }))
            .collect()
    }

    pub fn shift(&self) -> u8 {
        self.a
    }

    pub fn clock(&self) -> u8 {
        self.b
    }

    pub fn index(&self) -> usize {
        3 * self.a as usize + self.b as usize
    }
}

/// `X^a Z^b` with `X|j> = |j+1 mod 3>` and `Z|j> = w^j |j>`, `w = exp(2 pi i / 3)`.
pub fn qutrit_displacement(label: &QutritWHLabel) -> ComplexMatrix {
    let (a, b) = (label.a as usize, label.b as usize);
    ComplexMatrix::from_fn(3, |row, col| {
        if row == (col + a) % 3 {
            let angle = 2.0 * PI * ((b * col) % 3) as f64 / 3.0;
            c(angle.cos(), angle.sin())
        } else {
            c(0.0, 0.0)
        }
    })
}
