//! Mermin pentagrams in W(5,2): five four-point contexts, any two meeting in
//! exactly one point, ten points in total.

use rayon::prelude::*;

use crate::geometry::SymplecticSpace;

use super::context_sign;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pentagram {
    /// Indices into [`SymplecticSpace::contexts4`], increasing.
    pub contexts: [usize; 5],
    /// The ten point indices, increasing.
    pub points: [usize; 10],
    pub signs: [i8; 5],
}

impl Pentagram {
    pub fn negative_count(&self) -> usize {
        self.signs.iter().filter(|&&s| s < 0).count()
    }

    pub fn is_magic(&self) -> bool {
        self.negative_count() % 2 == 1
    }

    /// Structural re-check from scratch against the catalog.
    pub fn validate(&self, space: &SymplecticSpace) -> bool {
        let ctx: Vec<&[usize; 4]> = match self.contexts.iter().map(|&i| space.contexts4().get(i)).collect() {
            Some(c) => c,
            None => return false,
        };
        let mut count = [0u8; 63];
        for c in &ctx {
            for &p in c.iter() {
                count[p] += 1;
            }
        }
        let pairwise = (0..5).all(|i| {
            (i + 1..5).all(|j| ctx[i].iter().filter(|p| ctx[j].contains(p)).count() == 1)
        });
        let points: Vec<usize> = (0..63).filter(|&p| count[p] > 0).collect();
        let signs_ok = ctx.iter().zip(&self.signs).all(|(c, &s)| {
            let obs: Vec<_> = c.iter().map(|&p| space.point(p)).collect();
            context_sign(&obs).ok() == Some(s)
        });
        pairwise
            && points.len() == 10
            && points == self.points
            && count.iter().all(|&c| c == 0 || c == 2)
            && signs_ok
    }

    pub fn labels(&self, space: &SymplecticSpace) -> Vec<Vec<String>> {
        self.contexts
            .iter()
            .map(|&i| space.contexts4()[i].iter().map(|&p| space.point(p).to_string()).collect())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PentagramCensus {
    /// All five-context configurations with the pentagram incidence pattern.
    pub geometric: usize,
    /// Those with an odd number of negative contexts.
    pub magic: usize,
    /// Every geometric pentagram, sorted by context indices.
    pub pentagrams: Vec<Pentagram>,
}

struct Finder<'a> {
    masks: &'a [u64],
    adjacency: &'a [Vec<u64>],
    words: usize,
}

impl Finder<'_> {
    /// Extends `chosen` by contexts from `candidates` (all meeting every
    /// chosen context in exactly one point) while the union grows by the
    /// pentagram rule `|∪| = 4t − t(t−1)/2`.
    fn extend(&self, chosen: &mut Vec<usize>, union: u64, candidates: &[u64], out: &mut Vec<[usize; 5]>) {
        if chosen.len() == 5 {
            out.push([chosen[0], chosen[1], chosen[2], chosen[3], chosen[4]]);
            return;
        }
        let t = chosen.len() + 1;
        let want = 4 * t - t * (t - 1) / 2;
        for w in 0..self.words {
            let mut bits = candidates[w];
            while bits != 0 {
                let j = w * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let u = union | self.masks[j];
                if u.count_ones() as usize != want {
                    continue;
                }
                // later candidates must exceed j and meet it in one point
                let next: Vec<u64> = (0..self.words)
                    .map(|k| {
                        let above = if k < j / 64 {
                            0
                        } else if k == j / 64 {
                            if j % 64 == 63 { 0 } else { !0u64 << (j % 64 + 1) }
                        } else {
                            !0
                        };
                        candidates[k] & self.adjacency[j][k] & above
                    })
                    .collect();
                chosen.push(j);
                self.extend(chosen, u, &next, out);
                chosen.pop();
            }
        }
    }
}

/// Enumerates every pentagram among the 945 contexts and counts the magic
/// ones. Parallel over the first context; the merged list is sorted.
pub fn pentagram_census(space: &SymplecticSpace) -> PentagramCensus {
    let ctx = space.contexts4();
    let n = ctx.len();
    let words = n.div_ceil(64);
    let masks: Vec<u64> = ctx.iter().map(|c| c.iter().fold(0u64, |m, &p| m | 1 << p)).collect();
    let signs: Vec<i8> = ctx
        .iter()
        .map(|c| {
            let obs: Vec<_> = c.iter().map(|&p| space.point(p)).collect();
            context_sign(&obs).expect("W(5,2) contexts are commuting and close to ±identity")
        })
        .collect();
    let adjacency: Vec<Vec<u64>> = masks
        .iter()
        .map(|&a| {
            let mut row = vec![0u64; words];
            for (j, &b) in masks.iter().enumerate() {
                if (a & b).count_ones() == 1 {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
            row
        })
        .collect();
    let finder = Finder {
        masks: &masks,
        adjacency: &adjacency,
        words,
    };

    let found: Vec<Vec<[usize; 5]>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let start: Vec<u64> = (0..words)
                .map(|k| {
                    let above = if k < i / 64 {
                        0
                    } else if k == i / 64 {
                        if i % 64 == 63 { 0 } else { !0u64 << (i % 64 + 1) }
                    } else {
                        !0
                    };
                    adjacency[i][k] & above
                })
                .collect();
            let mut out = Vec::new();
            finder.extend(&mut vec![i], masks[i], &start, &mut out);
            out
        })
        .collect();

    let pentagrams: Vec<Pentagram> = found
        .into_iter()
        .flatten()
        .map(|c| {
            let union = c.iter().fold(0u64, |m, &i| m | masks[i]);
            let pts: Vec<usize> = (0..63).filter(|&p| union >> p & 1 == 1).collect();
            Pentagram {
                contexts: c,
                points: pts.try_into().expect("ten points"),
                signs: c.map(|i| signs[i]),
            }
        })
        .collect();
    let magic = pentagrams.iter().filter(|p| p.is_magic()).count();
    PentagramCensus {
        geometric: pentagrams.len(),
        magic,
        pentagrams,
    }
}
