//! Adding full twists to a twist region.

use super::FamilyError;
use crate::diagram::{twist_regions, Diagram, TwistRegion};

/// Adds `2k` crossings to `region`, extending its bigon chain at
/// `region.ends[0]`, and restores alternation from an existing crossing.
pub fn insert_full_twists(
    d: &Diagram,
    region: &TwistRegion,
    k: usize,
) -> Result<Diagram, FamilyError> {
    if !d.is_alternating() {
        return Err(FamilyError::NotAlternating);
    }
    let known = twist_regions(d)
        .into_iter()
        .any(|r| r == *region || r.with_axis(region.axis) == *region);
    if !known {
        return Err(FamilyError::RegionInvalid);
    }
    if k == 0 {
        return Ok(d.clone());
    }
    let mut e = d.embedding();
    let corner = region.ends[0];
    let c = corner.crossing;
    let i = corner.index;
    let (lo, hi) = ((c, i), (c, (i + 1) % 4));
    let far_lo = e.links[lo.0][lo.1 as usize];
    let far_hi = e.links[hi.0][hi.1 as usize];
    // Each new crossing meets the previous pair with arms 2 (from `lo`) and
    // 1 (from `hi`), and hands on arms 3 and 0 in the same roles, so after
    // an even number of crossings each strand is back on its own side.
    let (mut a, mut b) = (lo, hi);
    for _ in 0..2 * k {
        let x = e.add_crossing(0);
        e.join(a, (x, 2));
        e.join(b, (x, 1));
        a = (x, 3);
        b = (x, 0);
    }
    e.join(a, far_lo);
    e.join(b, far_hi);
    e.make_alternating(c, e.over_axis[c]);
    let start = e.links[0][0];
    Ok(e.to_diagram(start)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::fingerprint;

    #[test]
    fn trefoil_region_grows_by_two() {
        let d = Diagram::from_pd(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap();
        let r = twist_regions(&d).remove(0);
        let d5 = insert_full_twists(&d, &r, 1).unwrap();
        assert_eq!(d5.crossing_count(), 5);
        assert!(d5.is_alternating() && d5.is_reduced());
        assert_ne!(fingerprint(&d5), fingerprint(&d));
        assert_eq!(twist_regions(&d5).len(), 1);
    }

    #[test]
    fn foreign_region_is_rejected() {
        let d = Diagram::from_pd(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap();
        let mut r = twist_regions(&d).remove(0);
        r.crossings.pop();
        assert_eq!(
            insert_full_twists(&d, &r, 1),
            Err(FamilyError::RegionInvalid)
        );
    }
}
