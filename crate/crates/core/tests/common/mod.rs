//! Explicit 8×8 complex matrices for three-qubit Pauli labels.

use num_complex::Complex64;

pub type Matrix = [[Complex64; 8]; 8];

fn single(letter: char) -> [[Complex64; 2]; 2] {
    let o = Complex64::new(0.0, 0.0);
    let l = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    match letter {
        'I' => [[l, o], [o, l]],
        'X' => [[o, l], [l, o]],
        'Y' => [[o, -i], [i, o]],
        'Z' => [[l, o], [o, -l]],
        other => panic!("unexpected letter {other}"),
    }
}

/// Matrix of a label such as `-iXYZ`; the leftmost letter is the most
/// significant tensor factor.
pub fn matrix(label: &str) -> Matrix {
    let (scale, letters) = if let Some(rest) = label.strip_prefix("-i") {
        (Complex64::new(0.0, -1.0), rest)
    } else if let Some(rest) = label.strip_prefix('-') {
        (Complex64::new(-1.0, 0.0), rest)
    } else if let Some(rest) = label.strip_prefix('i') {
        (Complex64::new(0.0, 1.0), rest)
    } else {
        (Complex64::new(1.0, 0.0), label.strip_prefix('+').unwrap_or(label))
    };
    let factors: Vec<_> = letters.chars().map(single).collect();
    assert_eq!(factors.len(), 3, "label {label}");
    let mut m = [[Complex64::new(0.0, 0.0); 8]; 8];
    for r in 0..8 {
        for c in 0..8 {
            let mut v = scale;
            for (q, f) in factors.iter().enumerate() {
                let shift = 2 - q;
                v *= f[(r >> shift) & 1][(c >> shift) & 1];
            }
            m[r][c] = v;
        }
    }
    m
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let mut m = [[Complex64::new(0.0, 0.0); 8]; 8];
    for r in 0..8 {
        for c in 0..8 {
            m[r][c] = (0..8).map(|k| a[r][k] * b[k][c]).sum();
        }
    }
    m
}

pub fn close(a: &Matrix, b: &Matrix) -> bool {
    a.iter().flatten().zip(b.iter().flatten()).all(|(x, y)| (x - y).norm() < 1e-12)
}
