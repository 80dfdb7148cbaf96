//! Pauli operators with exact phase tracking and the symplectic GF(2) structure
//! of the factored Pauli group.
//!
//! An operator is stored as `i^phase · ⊗_j X^{x_j} Z^{z_j}`. Qubit 1 (the
//! leftmost letter of a Pauli string) is bit 0 of both `x` and `z`. The letter
//! `Y` is always read as `i·X·Z`, so every sign quoted anywhere in this crate is
//! relative to that convention.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Largest supported qubit count (bits are packed into one `u64` per block).
pub const MAX_QUBITS: usize = 64;

fn mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A phaseless Pauli operator, i.e. an element of GF(2)^{2n}.
///
/// Equality and hashing are on the raw bits. The total order compares the
/// packed word `x | z << n` numerically, qubit count first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GfVector {
    x: u64,
    z: u64,
    n: u8,
}

impl GfVector {
    pub fn new(n: usize, x: u64, z: u64) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::InvalidPauli(format!("unsupported qubit count {n}")));
        }
        if x & !mask(n) != 0 || z & !mask(n) != 0 {
            return Err(Error::InvalidPauli(format!("bits exceed {n} qubits")));
        }
        Ok(Self { x, z, n: n as u8 })
    }

    /// Three-qubit vector from its packed 6-bit code `x | z << 3`.
    pub fn from_code3(code: u8) -> Self {
        debug_assert!(code < 64);
        Self {
            x: u64::from(code & 7),
            z: u64::from(code >> 3),
            n: 3,
        }
    }

    /// Packed code `x | z << 3`; only meaningful for three qubits.
    pub fn code3(&self) -> u8 {
        debug_assert_eq!(self.n, 3);
        (self.x | (self.z << 3)) as u8
    }

    pub fn identity(n: usize) -> Self {
        Self { x: 0, z: 0, n: n as u8 }
    }

    pub fn qubits(&self) -> usize {
        self.n as usize
    }

    pub fn x_bits(&self) -> u64 {
        self.x
    }

    pub fn z_bits(&self) -> u64 {
        self.z
    }

    pub fn is_zero(&self) -> bool {
        self.x == 0 && self.z == 0
    }

    /// Number of qubits carrying a `Y`.
    pub fn y_count(&self) -> u32 {
        (self.x & self.z).count_ones()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_qubits(self.qubits(), other.qubits())?;
        Ok(Self {
            x: self.x ^ other.x,
            z: self.z ^ other.z,
            n: self.n,
        })
    }

    /// The operator spelled by this vector's letters (`Y = iXZ`), with no
    /// extra sign.
    pub fn lift(&self) -> PauliElement {
        PauliElement {
            phase: (self.y_count() % 4) as u8,
            x: self.x,
            z: self.z,
            n: self.n,
        }
    }

    fn packed(&self) -> u128 {
        u128::from(self.x) | (u128::from(self.z) << self.n)
    }
}

impl Ord for GfVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.packed().cmp(&other.packed()))
    }
}

impl PartialOrd for GfVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GfVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.qubits() {
            let letter = match ((self.x >> j) & 1, (self.z >> j) & 1) {
                (0, 0) => 'I',
                (1, 0) => 'X',
                (0, 1) => 'Z',
                _ => 'Y',
            };
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

/// Parses an unsigned Pauli string into its GF(2) vector. Any phase prefix is
/// rejected, since a point of the factored group carries no sign.
impl FromStr for GfVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let e = parse_pauli(s)?;
        if e.phase_offset() != 0 {
            return Err(Error::InvalidPauli(format!(
                "{s:?}: expected an unsigned Pauli string"
            )));
        }
        Ok(e.projective())
    }
}

/// A signed Pauli operator `i^phase · ⊗_j X^{x_j} Z^{z_j}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PauliElement {
    phase: u8,
    x: u64,
    z: u64,
    n: u8,
}

impl PauliElement {
    pub fn new(n: usize, phase: u8, x: u64, z: u64) -> Result<Self> {
        let v = GfVector::new(n, x, z)?;
        Ok(Self {
            phase: phase % 4,
            x: v.x,
            z: v.z,
            n: v.n,
        })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            phase: 0,
            x: 0,
            z: 0,
            n: n as u8,
        }
    }

    pub fn phase_exp(&self) -> u8 {
        self.phase
    }

    pub fn x_bits(&self) -> u64 {
        self.x
    }

    pub fn z_bits(&self) -> u64 {
        self.z
    }

    pub fn qubits(&self) -> usize {
        self.n as usize
    }

    pub fn projective(&self) -> GfVector {
        GfVector {
            x: self.x,
            z: self.z,
            n: self.n,
        }
    }

    /// Phase left over once the letters are spelled with `Y = iXZ`.
    fn phase_offset(&self) -> u8 {
        ((self.phase as u32 + 4 - self.projective().y_count() % 4) % 4) as u8
    }

    /// Hermitian conjugate: `(X^x Z^z)^† = Z^z X^x = (-1)^{x·z} X^x Z^z`.
    pub fn adjoint(&self) -> Self {
        let swap = 2 * ((self.x & self.z).count_ones() % 2) as u8;
        Self {
            phase: (4 - self.phase + swap) % 4,
            ..*self
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        multiply(self, other)
    }
}

impl fmt::Display for PauliElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_pauli(self))
    }
}

impl FromStr for PauliElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_pauli(s)
    }
}

fn check_qubits(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::QubitMismatch { left: a, right: b });
    }
    Ok(())
}

/// Parses `[prefix]letters` where the prefix is one of `""`, `"+"`, `"-"`,
/// `"i"`, `"-i"` and the letters come from `IXYZ`.
pub fn parse_pauli(text: &str) -> Result<PauliElement> {
    let (prefix_phase, body) = if let Some(rest) = text.strip_prefix("-i") {
        (3, rest)
    } else if let Some(rest) = text.strip_prefix('-') {
        (2, rest)
    } else if let Some(rest) = text.strip_prefix('+') {
        (0, rest)
    } else if let Some(rest) = text.strip_prefix('i') {
        (1, rest)
    } else {
        (0, text)
    };
    if body.is_empty() {
        return Err(Error::InvalidPauli(format!("{text:?}: empty operator")));
    }
    if body.len() > MAX_QUBITS {
        return Err(Error::InvalidPauli(format!("{text:?}: too many qubits")));
    }
    let mut phase = prefix_phase;
    let (mut x, mut z) = (0u64, 0u64);
    for (j, c) in body.chars().enumerate() {
        match c {
            'I' => {}
            'X' => x |= 1 << j,
            'Z' => z |= 1 << j,
            'Y' => {
                x |= 1 << j;
                z |= 1 << j;
                phase += 1;
            }
            other => {
                return Err(Error::InvalidPauli(format!(
                    "{text:?}: unexpected character {other:?}"
                )))
            }
        }
    }
    PauliElement::new(body.chars().count(), (phase % 4) as u8, x, z)
}

/// Canonical string of a signed operator; inverse of [`parse_pauli`].
pub fn format_pauli(e: &PauliElement) -> String {
    let prefix = match e.phase_offset() {
        0 => "",
        1 => "i",
        2 => "-",
        _ => "-i",
    };
    format!("{prefix}{}", e.projective())
}

pub fn multiply(a: &PauliElement, b: &PauliElement) -> Result<PauliElement> {
    check_qubits(a.qubits(), b.qubits())?;
    // Z^{za} X^{xb} = (-1)^{za·xb} X^{xb} Z^{za}
    let swap = 2 * ((a.z & b.x).count_ones() % 2);
    Ok(PauliElement {
        phase: ((u32::from(a.phase) + u32::from(b.phase) + swap) % 4) as u8,
        x: a.x ^ b.x,
        z: a.z ^ b.z,
        n: a.n,
    })
}

/// `⟨u, v⟩ = u.x·v.z + u.z·v.x (mod 2)`; zero exactly when the operators commute.
pub fn symplectic_form(u: &GfVector, v: &GfVector) -> Result<u8> {
    check_qubits(u.qubits(), v.qubits())?;
    Ok((((u.x & v.z) ^ (u.z & v.x)).count_ones() % 2) as u8)
}

pub fn commute(u: &GfVector, v: &GfVector) -> Result<bool> {
    Ok(symplectic_form(u, v)? == 0)
}

/// A unit scalar `i^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Unit(pub u8);

impl Unit {
    pub const PLUS: Unit = Unit(0);
    pub const MINUS: Unit = Unit(2);

    /// `Some(±1)` for real units.
    pub fn as_sign(&self) -> Option<i8> {
        match self.0 {
            0 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 % 4 {
            0 => "+1",
            1 => "+i",
            2 => "-1",
            _ => "-i",
        })
    }
}

/// Scalar value of the ordered product of `observables`, which must be
/// proportional to the identity.
pub fn product_sign(observables: &[PauliElement]) -> Result<Unit> {
    let first = observables
        .first()
        .ok_or_else(|| Error::InvalidPauli("empty product".into()))?;
    let mut acc = PauliElement::identity(first.qubits());
    for o in observables {
        acc = multiply(&acc, o)?;
    }
    if !acc.projective().is_zero() {
        return Err(Error::NotIdentity(acc.projective().to_string()));
    }
    Ok(Unit(acc.phase))
}
