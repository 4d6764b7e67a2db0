//! Rotation systems: crossings with four counterclockwise arms and a record
//! of which axis carries the over strand. Constructions that are easier to
//! describe geometrically build one of these and convert it to a PD code.

use super::{Diagram, DiagramError};

pub type Arm = (usize, u8);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    /// `links[c][k]` is the arm joined to arm `k` of crossing `c`.
    pub links: Vec<[Arm; 4]>,
    /// 0 when arms 0 and 2 carry the over strand, 1 when arms 1 and 3 do.
    pub over_axis: Vec<u8>,
}

impl Embedding {
    pub fn new(n: usize) -> Self {
        Embedding {
            links: vec![[(usize::MAX, 0); 4]; n],
            over_axis: vec![0; n],
        }
    }

    pub fn len(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }

    pub fn join(&mut self, a: Arm, b: Arm) {
        self.links[a.0][a.1 as usize] = b;
        self.links[b.0][b.1 as usize] = a;
    }

    pub fn add_crossing(&mut self, over_axis: u8) -> usize {
        self.links.push([(usize::MAX, 0); 4]);
        self.over_axis.push(over_axis);
        self.links.len() - 1
    }

    pub fn from_diagram(d: &Diagram) -> Self {
        let n = d.crossing_count();
        let mut e = Embedding::new(n);
        let mut first: Vec<Option<Arm>> = vec![None; 2 * n + 1];
        for (c, x) in d.pd().iter().enumerate() {
            for (i, &l) in x.iter().enumerate() {
                let arm = (c, i as u8);
                match first[l as usize] {
                    None => first[l as usize] = Some(arm),
                    Some(o) => e.join(o, arm),
                }
            }
            e.over_axis[c] = 1;
        }
        e
    }

    /// Arms visited when leaving through `start`: the list of
    /// `(crossing, entry arm)` pairs, in order, until the knot closes.
    pub fn traverse(&self, start: Arm) -> Vec<Arm> {
        let mut out = Vec::new();
        let mut cur = start;
        loop {
            let (c, k) = self.links[cur.0][cur.1 as usize];
            if c == usize::MAX {
                break;
            }
            out.push((c, k));
            cur = (c, (k + 2) % 4);
            if cur == start || out.len() > 2 * self.len() {
                break;
            }
        }
        out
    }

    /// Chooses over/under so the diagram alternates, with `anchor` crossing
    /// having its over strand on `axis`.
    pub fn make_alternating(&mut self, anchor: usize, axis: u8) {
        if self.is_empty() {
            return;
        }
        let walk = self.traverse((0, 0));
        let k_a = walk
            .iter()
            .position(|&(c, k)| c == anchor && k % 2 == axis)
            .expect("anchor crossing is on the knot");
        for (k, &(c, arm)) in walk.iter().enumerate() {
            if (k + k_a) % 2 == 0 {
                self.over_axis[c] = arm % 2;
            }
        }
    }

    /// Converts to a validated diagram whose edge 1 leaves through `start`.
    pub fn to_diagram(&self, start: Arm) -> Result<Diagram, DiagramError> {
        let n = self.len();
        if n == 0 {
            return Ok(Diagram::unknot());
        }
        for c in 0..n {
            for k in 0..4 {
                let (c2, k2) = self.links[c][k];
                if c2 >= n || self.links[c2][k2 as usize] != (c, k as u8) {
                    return Err(DiagramError::EdgeDegree(0));
                }
            }
        }
        let walk = self.traverse(start);
        if walk.len() != 2 * n {
            return Err(DiagramError::MultiComponent);
        }
        let mut under_in = vec![u8::MAX; n];
        for &(c, k) in &walk {
            if k % 2 != self.over_axis[c] {
                if under_in[c] != u8::MAX {
                    return Err(DiagramError::Orientation);
                }
                under_in[c] = k;
            }
        }
        let m = 2 * n as u32;
        let mut pd = vec![[0u32; 4]; n];
        for (idx, &(c, k)) in walk.iter().enumerate() {
            let lin = idx as u32 + 1;
            let lout = if lin == m { 1 } else { lin + 1 };
            let s = ((k + 4 - under_in[c]) % 4) as usize;
            pd[c][s] = lin;
            pd[c][(s + 2) % 4] = lout;
        }
        Diagram::from_pd(&pd)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_through_embedding() {
        let d = Diagram::from_pd(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap();
        let e = d.embedding();
        // Edge 1 is the one ending at slot 0 of crossing 0; leave through its
        // other end.
        let start = e.links[0][0];
        assert_eq!(e.to_diagram(start).unwrap(), d);
    }

    #[test]
    fn alternating_completion() {
        let d = Diagram::from_pd(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap();
        let mut e = d.embedding();
        e.over_axis = vec![0, 1, 0];
        let start = e.links[0][0];
        assert!(!e.to_diagram(start).unwrap().is_alternating());
        e.make_alternating(0, 1);
        let alt = e.to_diagram(start).unwrap();
        assert!(alt.is_alternating());
        assert_eq!(alt, d);
        e.make_alternating(0, 0);
        assert_eq!(e.to_diagram(start).unwrap(), d.mirror());
    }
}
