//! Twist regions: maximal chains of bigon faces, plus isolated crossings.

use super::{Corner, Diagram};

/// Which pair of opposite corners the bigons of a region occupy.
/// `A` is corners 1 and 3, `B` is corners 0 and 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwistAxis {
    A,
    B,
}

impl TwistAxis {
    fn parity(self) -> u8 {
        match self {
            TwistAxis::A => 1,
            TwistAxis::B => 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistRegion {
    /// Crossings in chain order; consecutive entries share a bigon.
    pub crossings: Vec<usize>,
    pub axis: TwistAxis,
    /// The bigons close up into a cycle (as in the standard (2, q) torus
    /// diagrams).
    pub cyclic: bool,
    /// Outward-facing corners at the two ends of the chain. For a cyclic
    /// region both entries name the bigon between the last and first
    /// crossing, seen from each side.
    pub ends: [Corner; 2],
}

impl TwistRegion {
    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    /// The edge labels bounding each end corner.
    pub fn boundary_edges(&self, d: &Diagram) -> [[u32; 2]; 2] {
        self.ends.map(|c| {
            let x = d.pd()[c.crossing];
            [x[c.index as usize], x[(c.index as usize + 1) % 4]]
        })
    }

    /// A singleton region can be twisted along either axis; this picks one.
    /// Longer regions are returned unchanged.
    pub fn with_axis(mut self, axis: TwistAxis) -> Self {
        if self.crossings.len() == 1 {
            let c = self.crossings[0];
            let p = axis.parity();
            self.axis = axis;
            self.ends = [
                Corner {
                    crossing: c,
                    index: p,
                },
                Corner {
                    crossing: c,
                    index: p + 2,
                },
            ];
        }
        self
    }
}

/// Partitions the crossings of `d` into twist regions, ordered by their
/// smallest crossing id.
pub fn twist_regions(d: &Diagram) -> Vec<TwistRegion> {
    let n = d.crossing_count();
    let faces = d.faces();
    // adj[c] holds (neighbour, corner at c) for each bigon at c.
    let mut adj: Vec<Vec<(usize, u8)>> = vec![Vec::new(); n];
    for corners in faces.corners() {
        if corners.len() == 2 && corners[0].crossing != corners[1].crossing {
            let (a, b) = (corners[0], corners[1]);
            adj[a.crossing].push((b.crossing, a.index));
            adj[b.crossing].push((a.crossing, b.index));
        }
    }
    let mut region_of = vec![usize::MAX; n];
    let mut regions = Vec::new();
    for seed in 0..n {
        if region_of[seed] != usize::MAX {
            continue;
        }
        let id = regions.len();
        let mut members = vec![seed];
        region_of[seed] = id;
        let mut i = 0;
        while i < members.len() {
            for &(v, _) in &adj[members[i]] {
                if region_of[v] == usize::MAX {
                    region_of[v] = id;
                    members.push(v);
                }
            }
            i += 1;
        }
        regions.push(order_region(&members, &adj));
    }
    regions
}

fn order_region(members: &[usize], adj: &[Vec<(usize, u8)>]) -> TwistRegion {
    if members.len() == 1 {
        let c = members[0];
        return TwistRegion {
            crossings: vec![c],
            axis: TwistAxis::B,
            cyclic: false,
            ends: [
                Corner {
                    crossing: c,
                    index: 0,
                },
                Corner {
                    crossing: c,
                    index: 2,
                },
            ],
        };
    }
    let start = members
        .iter()
        .copied()
        .filter(|&c| adj[c].len() == 1)
        .min()
        .or_else(|| members.iter().copied().min())
        .unwrap();
    let cyclic = adj[start].len() != 1;
    let first_corner = adj[start][0].1;
    let axis = if first_corner % 2 == 1 {
        TwistAxis::A
    } else {
        TwistAxis::B
    };

    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = adj[cur]
            .iter()
            .map(|&(v, _)| v)
            .find(|&v| v != prev && !order.contains(&v));
        match next {
            Some(v) => {
                order.push(v);
                prev = cur;
                cur = v;
            }
            None => break,
        }
    }
    // Anything not reached along a simple walk is appended so the result
    // stays a partition.
    for &m in members {
        if !order.contains(&m) {
            order.push(m);
        }
    }

    let last = *order.last().unwrap();
    let second = order[1];
    let before_last = order[order.len() - 2];
    let ends = if cyclic {
        let c0 = adj[start]
            .iter()
            .find(|&&(v, _)| v == last)
            .map(|&(_, k)| k);
        let c1 = adj[last]
            .iter()
            .find(|&&(v, _)| v == start)
            .map(|&(_, k)| k);
        [
            Corner {
                crossing: start,
                index: c0.unwrap_or((first_corner + 2) % 4),
            },
            Corner {
                crossing: last,
                index: c1.unwrap_or(0),
            },
        ]
    } else {
        let inner0 = adj[start].iter().find(|&&(v, _)| v == second).unwrap().1;
        let inner1 = adj[last]
            .iter()
            .find(|&&(v, _)| v == before_last)
            .unwrap()
            .1;
        [
            Corner {
                crossing: start,
                index: (inner0 + 2) % 4,
            },
            Corner {
                crossing: last,
                index: (inner1 + 2) % 4,
            },
        ]
    };
    TwistRegion {
        crossings: order,
        axis,
        cyclic,
        ends,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_is_one_cyclic_region() {
        let d = Diagram::from_pd(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap();
        let r = twist_regions(&d);
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].len(), 3);
        assert!(r[0].cyclic);
    }

    #[test]
    fn figure_eight_has_two_chains() {
        let d =
            Diagram::from_pd(&[[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]]).unwrap();
        let r = twist_regions(&d);
        assert_eq!(r.len(), 2);
        for reg in &r {
            assert_eq!(reg.len(), 2);
            assert!(!reg.cyclic);
            let f = d.faces();
            let [a, b] = reg.ends;
            assert_ne!(
                f.corner_face(a.crossing, a.index),
                f.corner_face(b.crossing, b.index)
            );
        }
        let mut all: Vec<usize> = r.iter().flat_map(|x| x.crossings.clone()).collect();
        all.sort_unstable();
        assert_eq!(all, vec![0, 1, 2, 3]);
    }
}
