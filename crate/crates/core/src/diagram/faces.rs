//! Faces of the diagram's 4-valent shadow and its checkerboard colouring.

use super::Diagram;

/// A corner of a crossing: corner `i` lies between slots `i` and `i + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Corner {
    pub crossing: usize,
    pub index: u8,
}

/// Face structure of a diagram. Darts are `(crossing, slot)` pairs encoded
/// as `4 * crossing + slot`.
#[derive(Debug, Clone)]
pub struct Faces {
    face_of_dart: Vec<usize>,
    count: usize,
    colour: Vec<u8>,
}

impl Faces {
    pub fn new(d: &Diagram) -> Self {
        let n = d.crossing_count();
        let pd = d.pd();
        let mut first = vec![usize::MAX; 2 * n + 1];
        let mut alpha = vec![0usize; 4 * n];
        for (c, x) in pd.iter().enumerate() {
            for (i, &l) in x.iter().enumerate() {
                let dart = 4 * c + i;
                let l = l as usize;
                if first[l] == usize::MAX {
                    first[l] = dart;
                } else {
                    alpha[dart] = first[l];
                    alpha[first[l]] = dart;
                }
            }
        }
        let phi = |dart: usize| {
            let a = alpha[dart];
            4 * (a / 4) + (a % 4 + 1) % 4
        };
        let mut face_of_dart = vec![usize::MAX; 4 * n];
        let mut count = 0;
        for s in 0..4 * n {
            if face_of_dart[s] != usize::MAX {
                continue;
            }
            let mut cur = s;
            while face_of_dart[cur] == usize::MAX {
                face_of_dart[cur] = count;
                cur = phi(cur);
            }
            count += 1;
        }
        if n == 0 {
            count = 2;
        }
        let mut f = Faces {
            face_of_dart,
            count,
            colour: Vec::new(),
        };
        f.colour = f.two_colour(n);
        f
    }

    pub fn count(&self) -> usize {
        self.count
    }

    /// Face containing corner `i` of crossing `c`.
    pub fn corner_face(&self, c: usize, i: u8) -> usize {
        self.face_of_dart[4 * c + (i as usize + 1) % 4]
    }

    /// Corners of each face.
    pub fn corners(&self) -> Vec<Vec<Corner>> {
        let mut out = vec![Vec::new(); self.count];
        for dart in 0..self.face_of_dart.len() {
            let c = dart / 4;
            let i = ((dart % 4) + 3) % 4;
            out[self.face_of_dart[dart]].push(Corner {
                crossing: c,
                index: i as u8,
            });
        }
        out
    }

    /// Face sizes, counted in corners.
    pub fn sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.count];
        for &f in &self.face_of_dart {
            out[f] += 1;
        }
        out
    }

    /// Checkerboard colour (0 or 1) of each face. Faces meeting across an
    /// edge get different colours; corners 0 and 2 of a crossing share one
    /// colour, corners 1 and 3 the other.
    pub fn colour(&self, face: usize) -> u8 {
        self.colour[face]
    }

    fn two_colour(&self, n: usize) -> Vec<u8> {
        let mut col = vec![u8::MAX; self.count];
        if n == 0 {
            return vec![0, 1];
        }
        // Colour faces so that corner parity determines colour at every
        // crossing; a planar diagram makes this consistent.
        let mut stack = vec![(self.corner_face(0, 0), 0u8)];
        let mut adj: Vec<Vec<(usize, u8)>> = vec![Vec::new(); self.count];
        for c in 0..n {
            for i in 0..4u8 {
                let f = self.corner_face(c, i);
                let g = self.corner_face(c, (i + 1) % 4);
                adj[f].push((g, 1));
                adj[g].push((f, 1));
            }
        }
        while let Some((f, k)) = stack.pop() {
            if col[f] != u8::MAX {
                continue;
            }
            col[f] = k;
            for &(g, flip) in &adj[f] {
                if col[g] == u8::MAX {
                    stack.push((g, k ^ flip));
                }
            }
        }
        col
    }

    /// True if the colouring is proper (always the case for planar input).
    pub fn colouring_is_proper(&self, n: usize) -> bool {
        (0..n).all(|c| {
            (0..4u8).all(|i| {
                self.colour(self.corner_face(c, i)) != self.colour(self.corner_face(c, (i + 1) % 4))
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_faces() {
        let d = Diagram::from_pd(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap();
        let f = d.faces();
        assert_eq!(f.count(), 5);
        let mut sizes = f.sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 2, 2, 3, 3]);
        assert!(f.colouring_is_proper(3));
        let corners = f.corners();
        assert_eq!(corners.iter().map(Vec::len).sum::<usize>(), 12);
        for (k, cs) in corners.iter().enumerate() {
            for c in cs {
                assert_eq!(f.corner_face(c.crossing, c.index), k);
            }
        }
    }
}
