//! Interleaving of two triangles inscribed in the boundary.
//!
//! Boundary points are identified by any key whose order matches the
//! clockwise order along the boundary from a fixed origin.

/// `x` lies on the closed clockwise arc from `a` to `b`.
pub fn in_arc<K: Ord>(x: &K, a: &K, b: &K) -> bool {
    if a <= b {
        a <= x && x <= b
    } else {
        x >= a || x <= b
    }
}

/// Each closed arc between consecutive corners of one triangle contains a
/// corner of the other, and vice versa. Corners must be listed clockwise.
pub fn interleaving<K: Ord>(a: &[K; 3], b: &[K; 3]) -> bool {
    covers(a, b) && covers(b, a)
}

fn covers<K: Ord>(a: &[K; 3], b: &[K; 3]) -> bool {
    (0..3).all(|i| b.iter().any(|x| in_arc(x, &a[i], &a[(i + 1) % 3])))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_corners_interleave() {
        assert!(interleaving(&[0, 4, 8], &[2, 6, 10]));
        assert!(interleaving(&[0, 4, 8], &[0, 4, 8]));
        // Shared corners count as lying on both arcs.
        assert!(interleaving(&[0, 4, 8], &[4, 6, 11]));
    }

    #[test]
    fn nested_triangles_do_not() {
        assert!(!interleaving(&[0, 4, 8], &[1, 2, 3]));
        assert!(!interleaving(&[0, 4, 8], &[1, 2, 6]));
        assert!(!interleaving(&[1, 2, 3], &[0, 4, 8]));
    }

    #[test]
    fn wrapping_arcs() {
        assert!(in_arc(&1, &9, &2));
        assert!(in_arc(&9, &9, &2));
        assert!(!in_arc(&5, &9, &2));
        assert!(interleaving(&[1, 5, 9], &[3, 7, 11]));
    }
}
