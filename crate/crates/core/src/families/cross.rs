//! Boundaries of cross-polytopes and connected sums of several copies.
//!
//! The boundary of the `d`-dimensional cross-polytope is the join of `d`
//! pairs of points, colored by coordinate. A facet is a sign word `x` in
//! `{0,1}^d` with vertex `(c, x_c)` in color `c`; its side in the
//! facet-ridge graph is the parity of `x`.

use std::collections::BTreeSet;

use crate::combinat::{BalancedComplex, CVertex, Face};
use crate::Error;

pub fn cross_polytope_boundary(d: usize) -> Result<BalancedComplex, Error> {
    if !(1..=20).contains(&d) {
        return Err(Error::Invalid(format!("cross-polytope dimension must be in 1..=20, got {d}")));
    }
    super::van_kampen_complex(1, d - 1)
}

/// Glue copy `guest` onto facet `host_word` of copy `host`. The guest always
/// contributes its all-zeros facet, which lies on side A; the host facet
/// must have odd parity, so it lies on side B.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gluing {
    pub host: usize,
    pub host_word: usize,
    pub guest: usize,
}

/// For `d >= 4`, copy 0 receives copies `1..2d` on its first `2d - 1` odd
/// facets. Copy 0 has only four odd facets when `d = 3`, so there copies
/// 1 to 4 go onto copy 0 and copies 5 and 6 onto copy 1.
pub fn default_gluing_pattern(d: usize) -> Result<Vec<Gluing>, Error> {
    let odd = |d: usize| (0..1usize << d).filter(|x| x.count_ones() % 2 == 1).collect::<Vec<_>>();
    match d {
        3 => {
            let w = odd(3);
            let mut p: Vec<Gluing> = (0..4).map(|i| Gluing { host: 0, host_word: w[i], guest: i + 1 }).collect();
            p.extend((0..2).map(|i| Gluing { host: 1, host_word: w[i], guest: 5 + i }));
            Ok(p)
        }
        d if (4..=12).contains(&d) => {
            Ok(odd(d).into_iter().take(2 * d - 1).enumerate().map(|(i, w)| Gluing { host: 0, host_word: w, guest: i + 1 }).collect())
        }
        _ => Err(Error::Invalid(format!("no default gluing pattern for d = {d}; use 3..=12"))),
    }
}

/// Connected sum of copies `0..=max guest` of the boundary of the
/// `d`-cross-polytope. Gluings are applied in order; every guest must be
/// glued exactly once, after its host is in place, onto a facet that is
/// still present.
pub fn glued_cross_polytopes(d: usize, pattern: &[Gluing]) -> Result<BalancedComplex, Error> {
    cross_polytope_boundary(d)?;
    let copies = 1 + pattern.iter().map(|g| g.guest).max().unwrap_or(0);
    // Global index of vertex (c, s) of each copy.
    let mut place: Vec<Option<Vec<[usize; 2]>>> = vec![None; copies];
    let mut sizes = vec![2; d];
    place[0] = Some((0..d).map(|_| [0, 1]).collect());
    let mut removed: BTreeSet<(usize, usize)> = BTreeSet::new();
    for g in pattern {
        let bad = |why: &str| Err(Error::Invalid(format!("gluing {g:?}: {why}")));
        if g.guest == 0 || place[g.guest].is_some() {
            return bad("guest is copy 0 or already placed");
        }
        let Some(host) = place.get(g.host).cloned().flatten() else {
            return bad("host is not placed yet");
        };
        if g.host_word >= 1 << d || g.host_word.count_ones() % 2 == 0 {
            return bad("host facet must be an odd sign word");
        }
        if !removed.insert((g.host, g.host_word)) {
            return bad("host facet is already glued");
        }
        let guest: Vec<[usize; 2]> = (0..d)
            .map(|c| {
                let fresh = sizes[c];
                sizes[c] += 1;
                [host[c][g.host_word >> c & 1], fresh]
            })
            .collect();
        place[g.guest] = Some(guest);
        removed.insert((g.guest, 0));
    }
    if let Some(missing) = place.iter().position(Option::is_none) {
        return Err(Error::Invalid(format!("copy {missing} is never glued")));
    }
    let mut facets = Vec::new();
    for (k, p) in place.iter().enumerate() {
        let p = p.as_ref().expect("all placed");
        for x in (0..1usize << d).filter(|&x| !removed.contains(&(k, x))) {
            let verts: Vec<CVertex> = (0..d).map(|c| (c, p[c][x >> c & 1])).collect();
            facets.push(Face::new(verts)?);
        }
    }
    let n = facets.len();
    let k = BalancedComplex::new(sizes, facets)?;
    assert_eq!(k.facets().len(), n, "glued copies produced a repeated facet");
    assert_eq!(n, copies * (1 << d) - 2 * pattern.len());
    Ok(k)
}
