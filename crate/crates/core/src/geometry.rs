//! The symplectic polar space W(5,2): its 63 points, 315 totally isotropic
//! lines, 135 Fano-plane generators and 945 four-point contexts, plus
//! GF(2)-linear maps on the ambient space.
//!
//! Point `i` is the three-qubit [`GfVector`] whose packed code
//! `x | z << 3` equals `i + 1`, so point indices follow the vector order.

use std::collections::BTreeSet;
use std::fmt;

use crate::gf2::{BitMatrix, BitVec};
use crate::pauli::GfVector;
use crate::{Error, Result};

pub const POINT_COUNT: usize = 63;

const NO_LINE: u16 = u16::MAX;

#[inline]
fn form(a: u8, b: u8) -> u8 {
    let (ax, az, bx, bz) = (a & 7, a >> 3, b & 7, b >> 3);
    (((ax & bz) ^ (az & bx)).count_ones() % 2) as u8
}

#[inline]
fn code(p: usize) -> u8 {
    (p + 1) as u8
}

#[inline]
fn point_of(code: u8) -> usize {
    code as usize - 1
}

#[derive(Clone, Debug)]
pub struct SymplecticSpace {
    points: Vec<GfVector>,
    lines: Vec<[usize; 3]>,
    generators: Vec<[usize; 7]>,
    contexts4: Vec<[usize; 4]>,
    pair_line: Vec<u16>,
    lines_through: Vec<Vec<usize>>,
}

impl SymplecticSpace {
    pub fn build() -> Self {
        let points: Vec<GfVector> = (0..POINT_COUNT).map(|p| GfVector::from_code3(code(p))).collect();

        let mut lines = Vec::new();
        for a in 0..POINT_COUNT {
            for b in a + 1..POINT_COUNT {
                let c = point_of(code(a) ^ code(b));
                if c > b && form(code(a), code(b)) == 0 {
                    lines.push([a, b, c]);
                }
            }
        }

        let mut pair_line = vec![NO_LINE; POINT_COUNT * POINT_COUNT];
        let mut lines_through = vec![Vec::new(); POINT_COUNT];
        for (i, l) in lines.iter().enumerate() {
            for (j, &p) in l.iter().enumerate() {
                lines_through[p].push(i);
                for &q in &l[j + 1..] {
                    pair_line[p * POINT_COUNT + q] = i as u16;
                    pair_line[q * POINT_COUNT + p] = i as u16;
                }
            }
        }

        let mut gens = BTreeSet::new();
        for l in &lines {
            let (a, b) = (code(l[0]), code(l[1]));
            for c in 1..64u8 {
                if form(a, c) != 0 || form(b, c) != 0 || l.contains(&point_of(c)) {
                    continue;
                }
                let mut g: Vec<usize> = [a, b, a ^ b, c, a ^ c, b ^ c, a ^ b ^ c]
                    .iter()
                    .map(|&k| point_of(k))
                    .collect();
                g.sort_unstable();
                gens.insert(<[usize; 7]>::try_from(g).unwrap());
            }
        }
        let generators: Vec<[usize; 7]> = gens.into_iter().collect();

        let mut ctx = BTreeSet::new();
        for g in &generators {
            for l in &lines {
                if l.iter().all(|p| g.contains(p)) {
                    let rest: Vec<usize> = g.iter().copied().filter(|p| !l.contains(p)).collect();
                    ctx.insert(<[usize; 4]>::try_from(rest).unwrap());
                }
            }
        }

        Self {
            points,
            lines,
            generators,
            contexts4: ctx.into_iter().collect(),
            pair_line,
            lines_through,
        }
    }

    pub fn points(&self) -> &[GfVector] {
        &self.points
    }

    pub fn point(&self, i: usize) -> GfVector {
        self.points[i]
    }

    pub fn lines(&self) -> &[[usize; 3]] {
        &self.lines
    }

    pub fn generators(&self) -> &[[usize; 7]] {
        &self.generators
    }

    pub fn contexts4(&self) -> &[[usize; 4]] {
        &self.contexts4
    }

    pub fn lines_through(&self, p: usize) -> &[usize] {
        &self.lines_through[p]
    }

    pub fn point_index(&self, v: &GfVector) -> Option<usize> {
        (v.qubits() == 3 && !v.is_zero()).then(|| point_of(v.code3()))
    }

    /// Index of the line through two distinct points, if they commute.
    pub fn line_index_of(&self, a: usize, b: usize) -> Option<usize> {
        match self.pair_line[a * POINT_COUNT + b] {
            NO_LINE => None,
            i => Some(i as usize),
        }
    }

    /// Index of the line with exactly these three points, in any order.
    pub fn line_index(&self, pts: [usize; 3]) -> Option<usize> {
        if pts[0] == pts[1] {
            return None;
        }
        let i = self.line_index_of(pts[0], pts[1])?;
        self.lines[i].contains(&pts[2]).then_some(i)
    }

    /// `{a, b, a+b}` when `a` and `b` commute.
    pub fn line_through(&self, a: &GfVector, b: &GfVector) -> Result<Option<[GfVector; 3]>> {
        let (Some(i), Some(j)) = (self.point_index(a), self.point_index(b)) else {
            return Err(Error::DegeneratePoints);
        };
        if i == j {
            return Err(Error::DegeneratePoints);
        }
        Ok(self.line_index_of(i, j).map(|l| self.lines[l].map(|p| self.points[p])))
    }

    /// Points as labels, in index order.
    pub fn labels(&self) -> Vec<String> {
        self.points.iter().map(ToString::to_string).collect()
    }
}

/// A GF(2)-linear map on three-qubit vectors, stored as the images of the
/// basis vectors XII, IXI, IIX, ZII, IZI, IIZ.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct LinearMap {
    images: [u8; 6],
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.basis_images().iter().map(|v| v.to_string()))
            .finish()
    }
}

impl LinearMap {
    pub fn identity() -> Self {
        Self {
            images: [1, 2, 4, 8, 16, 32],
        }
    }

    /// Exchanges the x- and z-blocks.
    pub fn swap_xz() -> Self {
        Self {
            images: [8, 16, 32, 1, 2, 4],
        }
    }

    pub fn from_basis_images(images: &[GfVector; 6]) -> Result<Self> {
        if images.iter().any(|v| v.qubits() != 3) {
            return Err(Error::InvalidPauli("basis images must be three-qubit".into()));
        }
        let map = Self {
            images: images.map(|v| v.code3()),
        };
        let mut m = BitMatrix::zeros(6, 6);
        for (c, &img) in map.images.iter().enumerate() {
            for r in 0..6 {
                m.set(r, c, (img >> r) & 1 == 1);
            }
        }
        if m.rank() != 6 {
            return Err(Error::SingularMap);
        }
        Ok(map)
    }

    pub fn basis_images(&self) -> [GfVector; 6] {
        self.images.map(GfVector::from_code3)
    }

    /// Column `c` of the 6×6 matrix as a bit vector.
    pub fn matrix_column(&self, c: usize) -> BitVec {
        let mut v = BitVec::zeros(6);
        for r in 0..6 {
            v.set(r, (self.images[c] >> r) & 1 == 1);
        }
        v
    }

    #[inline]
    pub fn apply_code(&self, code: u8) -> u8 {
        let mut out = 0;
        for (i, &img) in self.images.iter().enumerate() {
            if (code >> i) & 1 == 1 {
                out ^= img;
            }
        }
        out
    }

    pub fn apply(&self, v: &GfVector) -> GfVector {
        GfVector::from_code3(self.apply_code(v.code3()))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            images: other.images.map(|c| self.apply_code(c)),
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::identity(), |acc, _| self.compose(&acc))
    }

    /// Least `k ≥ 1` with `self^k = 1`. The general linear group of GF(2)^6 is
    /// finite, so this terminates for invertible maps.
    pub fn order(&self) -> usize {
        let mut acc = *self;
        let mut k = 1;
        while acc != Self::identity() {
            acc = self.compose(&acc);
            k += 1;
        }
        k
    }

    pub fn is_symplectic(&self) -> bool {
        (0..6).all(|i| {
            (i + 1..6).all(|j| form(self.images[i], self.images[j]) == form(1 << i, 1 << j))
        })
    }

    /// Induced permutation of point indices.
    pub fn point_permutation(&self) -> Vec<usize> {
        (0..POINT_COUNT).map(|p| point_of(self.apply_code(code(p)))).collect()
    }
}
