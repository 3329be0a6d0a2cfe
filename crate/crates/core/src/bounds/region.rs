use std::cmp::Ordering;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cf::Digit;
use crate::error::{Error, Result};
use crate::numeric::{frac_strings, parse_frac_strings, serde_frac, QuadSurd, Rational};
use crate::theta::DeltaPoint;

/// A polygon vertex with rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub alpha: Rational,
    pub beta: Rational,
}

impl Vertex {
    pub fn new(alpha: Rational, beta: Rational) -> Self {
        Vertex { alpha, beta }
    }

    pub fn to_delta_point(&self) -> DeltaPoint {
        DeltaPoint { alpha: QuadSurd::from_rational(&self.alpha), beta: QuadSurd::from_rational(&self.beta) }
    }

    pub fn swapped(&self) -> Self {
        Vertex { alpha: self.beta.clone(), beta: self.alpha.clone() }
    }
}

impl Serialize for Vertex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(2))?;
        seq.serialize_element(&frac_strings(&self.alpha))?;
        seq.serialize_element(&frac_strings(&self.beta))?;
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Vertex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a, b] = <[[String; 2]; 2]>::deserialize(d)?;
        let alpha = parse_frac_strings(&a).map_err(serde::de::Error::custom)?;
        let beta = parse_frac_strings(&b).map_err(serde::de::Error::custom)?;
        Ok(Vertex { alpha, beta })
    }
}

/// A supporting line, `β = slope·α + intercept` or `α = c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Edge {
    Sloped {
        #[serde(with = "serde_frac")]
        slope: Rational,
        #[serde(with = "serde_frac")]
        intercept: Rational,
    },
    Vertical {
        #[serde(with = "serde_frac")]
        vertical: Rational,
    },
}

impl Edge {
    pub fn through(a: &Vertex, b: &Vertex) -> Self {
        if a.alpha == b.alpha {
            return Edge::Vertical { vertical: a.alpha.clone() };
        }
        let slope = (&b.beta - &a.beta) / (&b.alpha - &a.alpha);
        let intercept = &a.beta - &slope * &a.alpha;
        Edge::Sloped { slope, intercept }
    }

    pub fn sloped(slope: Rational, intercept: Rational) -> Self {
        Edge::Sloped { slope, intercept }
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        match self {
            Edge::Sloped { slope, intercept } => v.beta == slope * &v.alpha + intercept,
            Edge::Vertical { vertical } => v.alpha == *vertical,
        }
    }

    fn swapped(&self) -> Self {
        match self {
            // β = sα + c  ⇔  α = β/s − c/s
            Edge::Sloped { slope, intercept } if !slope.is_zero() => {
                Edge::Sloped { slope: slope.recip(), intercept: -(intercept / slope) }
            }
            Edge::Sloped { intercept, .. } => Edge::Vertical { vertical: intercept.clone() },
            Edge::Vertical { vertical } => Edge::Sloped { slope: Rational::zero(), intercept: vertical.clone() },
        }
    }
}

/// Convex polygon in `Δ` with exact vertices and supporting lines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Region {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

fn cross(o: &Vertex, a: &Vertex, b: &Vertex) -> Rational {
    (&a.alpha - &o.alpha) * (&b.beta - &o.beta) - (&a.beta - &o.beta) * (&b.alpha - &o.alpha)
}

impl Region {
    /// Polygon through `points` in the given cyclic order. Repeated points
    /// and points lying on the segment between their neighbours are dropped.
    pub fn from_points(points: &[(Rational, Rational)]) -> Self {
        let mut vs: Vec<Vertex> = Vec::new();
        for (a, b) in points {
            let v = Vertex::new(a.clone(), b.clone());
            if !vs.contains(&v) {
                vs.push(v);
            }
        }
        loop {
            let n = vs.len();
            if n < 3 {
                break;
            }
            let drop = (0..n).find(|&i| cross(&vs[(i + n - 1) % n], &vs[i], &vs[(i + 1) % n]).is_zero());
            match drop {
                Some(i) => {
                    vs.remove(i);
                }
                None => break,
            }
        }
        let n = vs.len();
        let edges = if n >= 3 { (0..n).map(|i| Edge::through(&vs[i], &vs[(i + 1) % n])).collect() } else { Vec::new() };
        Region { vertices: vs, edges }
    }

    /// Like [`Region::from_points`], additionally requiring a genuine convex
    /// polygon.
    pub fn new(points: &[(Rational, Rational)]) -> Result<Self> {
        let r = Self::from_points(points);
        if r.is_degenerate() {
            return Err(Error::InvalidArgument("region has fewer than three non-collinear vertices".into()));
        }
        if !r.is_convex() {
            return Err(Error::InvalidArgument("vertices are not in convex position".into()));
        }
        Ok(r)
    }

    /// The full triangle `Δ`.
    pub fn delta() -> Self {
        let z = Rational::zero;
        let o = Rational::one;
        Self::from_points(&[(z(), z()), (o(), z()), (z(), o())])
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_degenerate(&self) -> bool {
        self.vertices.len() < 3
    }

    /// Twice the signed area.
    fn signed_area2(&self) -> Rational {
        let n = self.vertices.len();
        let mut s = Rational::zero();
        for i in 0..n {
            let (a, b) = (&self.vertices[i], &self.vertices[(i + 1) % n]);
            s += &a.alpha * &b.beta - &b.alpha * &a.beta;
        }
        s
    }

    pub fn area(&self) -> Rational {
        self.signed_area2().abs() / Rational::from_integer(2.into())
    }

    fn orientation(&self) -> Ordering {
        self.signed_area2().cmp(&Rational::zero())
    }

    pub fn is_convex(&self) -> bool {
        let n = self.vertices.len();
        let o = self.orientation();
        o != Ordering::Equal
            && (0..n).all(|i| {
                let c = cross(&self.vertices[i], &self.vertices[(i + 1) % n], &self.vertices[(i + 2) % n]);
                c.cmp(&Rational::zero()) == o
            })
    }

    /// Closed-polygon membership, decided exactly.
    pub fn contains(&self, p: &DeltaPoint) -> bool {
        let n = self.vertices.len();
        if n < 3 {
            return false;
        }
        let o = self.orientation();
        (0..n).all(|i| {
            let (a, b) = (&self.vertices[i], &self.vertices[(i + 1) % n]);
            let da = QuadSurd::from_rational(&(&b.alpha - &a.alpha));
            let db = QuadSurd::from_rational(&(&b.beta - &a.beta));
            let pa = &p.alpha - &QuadSurd::from_rational(&a.alpha);
            let pb = &p.beta - &QuadSurd::from_rational(&a.beta);
            let c = &da * &pb - &db * &pa;
            c.signum() == o || c.is_zero()
        })
    }

    pub fn contains_vertex(&self, v: &Vertex) -> bool {
        self.contains(&v.to_delta_point())
    }

    /// Every vertex lies in the closed triangle.
    pub fn within_delta(&self) -> bool {
        self.vertices.iter().all(|v| {
            !v.alpha.is_negative() && !v.beta.is_negative() && &v.alpha + &v.beta <= Rational::one()
        })
    }

    /// Mirror image in the diagonal `β = α`.
    pub fn reflect(&self) -> Self {
        Region {
            vertices: self.vertices.iter().map(Vertex::swapped).collect(),
            edges: self.edges.iter().map(Edge::swapped).collect(),
        }
    }

    pub fn vertices_f64(&self) -> Vec<(f64, f64)> {
        self.vertices
            .iter()
            .map(|v| (v.alpha.to_f64().unwrap_or(f64::NAN), v.beta.to_f64().unwrap_or(f64::NAN)))
            .collect()
    }

    /// Whether every vertex satisfies both edges it is incident to.
    pub fn edges_consistent(&self) -> bool {
        let n = self.vertices.len();
        self.edges.len() == n
            && (0..n).all(|i| self.edges[i].contains(&self.vertices[i]) && self.edges[i].contains(&self.vertices[(i + 1) % n]))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("region serializes")
    }
}

fn r(n: u64, d: u64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// `Ψ(1/A, 1/B) = (A/(AB+1), B/(AB+1))`.
fn psi_of_reciprocals(a: Digit, b: Digit) -> Vertex {
    let den = a * b + 1;
    Vertex::new(r(a, den), r(b, den))
}

fn digit_check(name: &str, a: Digit) -> Result<()> {
    if a == 0 {
        return Err(Error::InvalidArgument(format!("{name} must be at least 1")));
    }
    Ok(())
}

/// `Ψ(V_a)`, the image of the cell `t ∈ (1/(a+1), 1/a]`.
pub fn region_psi_v(a: Digit) -> Result<Region> {
    digit_check("a", a)?;
    let pts = if a == 1 {
        vec![(r(0, 1), r(1, 2)), (r(2, 3), r(1, 3)), (r(0, 1), r(1, 1))]
    } else {
        vec![
            (r(0, 1), r(1, a)),
            (r(0, 1), r(1, a + 1)),
            (r(a + 1, a + 2), r(1, a + 2)),
            (r(a, a + 1), r(1, a + 1)),
        ]
    };
    Ok(Region::from_points(&pts))
}

/// `Ψ(H_a)`, the reflection of `Ψ(V_a)`.
pub fn region_psi_h(a: Digit) -> Result<Region> {
    Ok(region_psi_v(a)?.reflect())
}

/// Top line `β = −α/a² + 1/a` and bottom line `β = −α/(a+1)² + 1/(a+1)`
/// of `Ψ(V_a)`.
pub fn psi_v_lines(a: Digit) -> (Edge, Edge) {
    (Edge::sloped(-r(1, a * a), r(1, a)), Edge::sloped(-r(1, (a + 1) * (a + 1)), r(1, a + 1)))
}

/// Corners of `V_M ∩ H_m` in the order top-left, top-right, bottom-left,
/// bottom-right, as `(t, v)` pairs.
pub fn i_corners(big_m: Digit, m: Digit) -> [(Rational, Rational); 4] {
    [
        (r(1, big_m), r(1, m + 1)),
        (r(1, big_m), r(1, m)),
        (r(1, big_m + 1), r(1, m + 1)),
        (r(1, big_m + 1), r(1, m)),
    ]
}

/// Vertices of `I_{M,m} = Ψ(V_M) ∩ Ψ(H_m)` in corner order.
pub fn i_vertices(big_m: Digit, m: Digit) -> [Vertex; 4] {
    [
        psi_of_reciprocals(big_m, m + 1),
        psi_of_reciprocals(big_m, m),
        psi_of_reciprocals(big_m + 1, m + 1),
        psi_of_reciprocals(big_m + 1, m),
    ]
}

fn cyclic(vs: [Vertex; 4]) -> Region {
    // corner order tl, tr, bl, br walked as tl, tr, br, bl
    let [tl, tr, bl, br] = vs;
    Region::from_points(&[tl, tr, br, bl].map(|v| (v.alpha, v.beta)))
}

/// `I_{M,m}`.
pub fn region_i(big_m: Digit, m: Digit) -> Result<Region> {
    digit_check("M", big_m)?;
    digit_check("m", m)?;
    Ok(cyclic(i_vertices(big_m, m)))
}

/// `Ψ(V_{1,k})`, the image of `t ∈ Δ_{1,k}`.
pub fn region_psi_v1k(k: Digit) -> Result<Region> {
    digit_check("k", k)?;
    Ok(Region::from_points(&[
        (r(0, 1), r(k, k + 1)),
        (r(0, 1), r(k + 1, k + 2)),
        (r(k + 2, 2 * k + 3), r(k + 1, 2 * k + 3)),
        (r(k + 1, 2 * k + 1), r(k, 2 * k + 1)),
    ]))
}

/// Bottom line `β = −k²α/(k+1)² + k/(k+1)`, top line (same with `k+1`),
/// and the right-hand line `β = 1 − α` of `Ψ(V_{1,k})`.
pub fn psi_v1k_lines(k: Digit) -> (Edge, Edge, Edge) {
    let bottom = Edge::sloped(-r(k * k, (k + 1) * (k + 1)), r(k, k + 1));
    let top = Edge::sloped(-r((k + 1) * (k + 1), (k + 2) * (k + 2)), r(k + 1, k + 2));
    (bottom, top, Edge::sloped(-Rational::one(), Rational::one()))
}

/// Corners of `V_{1,M} ∩ H_{1,m}` as `(t, v)`, in the order used for
/// [`i1_vertices`].
pub fn i1_corners(big_m: Digit, m: Digit) -> [(Rational, Rational); 4] {
    [
        (r(big_m + 1, big_m + 2), r(m + 1, m + 2)),
        (r(big_m + 1, big_m + 2), r(m, m + 1)),
        (r(big_m, big_m + 1), r(m, m + 1)),
        (r(big_m, big_m + 1), r(m + 1, m + 2)),
    ]
}

/// Vertices of `Ψ(V_{1,M}) ∩ Ψ(H_{1,m})` from their closed forms.
pub fn i1_vertices(big_m: Digit, m: Digit) -> [Vertex; 4] {
    let (bm, m) = (big_m, m);
    let d1 = (m + 1) * (bm + 1) + (m + 2) * (bm + 2);
    let d2 = m * (bm + 1) + (m + 1) * (bm + 2);
    let d3 = m * bm + (m + 1) * (bm + 1);
    let d4 = (m + 1) * bm + (m + 2) * (bm + 1);
    [
        Vertex::new(r((m + 1) * (bm + 2), d1), r((m + 2) * (bm + 1), d1)),
        Vertex::new(r(m * (bm + 2), d2), r((m + 1) * (bm + 1), d2)),
        Vertex::new(r(m * (bm + 1), d3), r((m + 1) * bm, d3)),
        Vertex::new(r((m + 1) * (bm + 1), d4), r((m + 2) * bm, d4)),
    ]
}

/// `Ψ(V_{1,M}) ∩ Ψ(H_{1,m})`.
pub fn region_i1(big_m: Digit, m: Digit) -> Result<Region> {
    digit_check("M", big_m)?;
    digit_check("m", m)?;
    Ok(Region::from_points(&i1_vertices(big_m, m).map(|v| (v.alpha, v.beta))))
}

/// An interval with independently open or closed ends.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellInterval {
    #[serde(with = "serde_frac")]
    pub lo: Rational,
    #[serde(with = "serde_frac")]
    pub hi: Rational,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl CellInterval {
    pub fn contains(&self, x: &QuadSurd) -> bool {
        let lo = QuadSurd::from_rational(&self.lo);
        let hi = QuadSurd::from_rational(&self.hi);
        let above = if self.lo_closed { *x >= lo } else { *x > lo };
        let below = if self.hi_closed { *x <= hi } else { *x < hi };
        above && below
    }
}

impl std::fmt::Display for CellInterval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let l = if self.lo_closed { '[' } else { '(' };
        let h = if self.hi_closed { ']' } else { ')' };
        write!(f, "{l}{}, {}{h}", self.lo, self.hi)
    }
}

/// `Δ_{1,k}`: the `x ∈ (1/2, 1)` with `a_1 = 1`, `a_2 = k`.
pub fn delta_1k_interval(k: Digit) -> Result<CellInterval> {
    digit_check("k", k)?;
    Ok(CellInterval { lo: r(k, k + 1), hi: r(k + 1, k + 2), lo_closed: k >= 2, hi_closed: false })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;
    use crate::theta::psi_rational;

    fn set(r: &Region) -> Vec<(Rational, Rational)> {
        let mut v: Vec<_> = r.vertices().iter().map(|v| (v.alpha.clone(), v.beta.clone())).collect();
        v.sort();
        v
    }

    fn sorted(mut v: Vec<(Rational, Rational)>) -> Vec<(Rational, Rational)> {
        v.sort();
        v
    }

    #[test]
    fn psi_v_examples() {
        let v2 = region_psi_v(2).unwrap();
        assert_eq!(
            v2.vertices().iter().map(|v| (v.alpha.clone(), v.beta.clone())).collect::<Vec<_>>(),
            vec![(rat(0, 1), rat(1, 2)), (rat(0, 1), rat(1, 3)), (rat(3, 4), rat(1, 4)), (rat(2, 3), rat(1, 3))]
        );
        let v1 = region_psi_v(1).unwrap();
        assert_eq!(set(&v1), sorted(vec![(rat(0, 1), rat(1, 2)), (rat(2, 3), rat(1, 3)), (rat(0, 1), rat(1, 1))]));
        let v3 = region_psi_v(3).unwrap();
        assert_eq!(
            set(&v3),
            sorted(vec![(rat(0, 1), rat(1, 3)), (rat(0, 1), rat(1, 4)), (rat(4, 5), rat(1, 5)), (rat(3, 4), rat(1, 4))])
        );
        for a in 1..=12 {
            let reg = region_psi_v(a).unwrap();
            assert!(reg.edges_consistent() && reg.is_convex() && reg.within_delta());
            let (top, bottom) = psi_v_lines(a);
            assert!(reg.edges().contains(&top), "a={a}");
            if a >= 2 {
                assert!(reg.edges().contains(&bottom), "a={a}");
            } else {
                // for a = 1 the bottom line still carries two vertices
                assert!(reg.vertices().iter().filter(|v| bottom.contains(v)).count() == 2);
            }
            // Ψ of the four cell corners
            for (t, v) in [(r(1, a), r(0, 1)), (r(1, a + 1), r(0, 1)), (r(1, a + 1), r(1, 1)), (r(1, a), r(1, 1))] {
                let (al, be) = psi_rational(&t, &v);
                assert!(reg.contains_vertex(&Vertex::new(al, be)));
            }
        }
    }

    #[test]
    fn psi_h_examples() {
        let h2 = region_psi_h(2).unwrap();
        assert_eq!(
            set(&h2),
            sorted(vec![(rat(1, 2), rat(0, 1)), (rat(1, 3), rat(0, 1)), (rat(1, 4), rat(3, 4)), (rat(1, 3), rat(2, 3))])
        );
        let h1 = region_psi_h(1).unwrap();
        assert_eq!(set(&h1), sorted(vec![(rat(1, 2), rat(0, 1)), (rat(1, 3), rat(2, 3)), (rat(1, 1), rat(0, 1))]));
        for a in 1..=8 {
            let v = region_psi_v(a).unwrap();
            assert_eq!(v.reflect().reflect(), v);
            let h = region_psi_h(a).unwrap();
            assert!(h.edges_consistent());
            // right/left-hand lines β = −a²α + a and β = −(a+1)²α + (a+1)
            let right = Edge::sloped(-r(a * a, 1), r(a, 1));
            assert!(h.edges().contains(&right));
            if a >= 2 {
                let left = Edge::sloped(-r((a + 1) * (a + 1), 1), r(a + 1, 1));
                assert!(h.edges().contains(&left));
            }
        }
    }

    #[test]
    fn region_i_examples() {
        let i21 = region_i(2, 1).unwrap();
        assert_eq!(
            set(&i21),
            sorted(vec![(rat(2, 5), rat(2, 5)), (rat(2, 3), rat(1, 3)), (rat(3, 7), rat(2, 7)), (rat(3, 4), rat(1, 4))])
        );
        assert!(i21.is_convex());
        for m in 1..=6 {
            let reg = region_i(m, m).unwrap();
            assert_eq!(reg.reflect().vertices().len(), reg.vertices().len());
            assert!(reg.contains_vertex(&Vertex::new(r(m, m * m + 1), r(m, m * m + 1))));
            let k = m + 1;
            assert!(reg.contains_vertex(&Vertex::new(r(k, k * k + 1), r(k, k * k + 1))));
        }
        // I_{1,1} collapses to a triangle: three of its corners lie on α + β = 1
        assert_eq!(region_i(1, 1).unwrap().vertices().len(), 3);
    }

    #[test]
    fn vertices_match_psi_of_corners() {
        for bm in 1..=12 {
            for m in 1..=12 {
                for (v, (t, w)) in i_vertices(bm, m).iter().zip(i_corners(bm, m)) {
                    assert_eq!((v.alpha.clone(), v.beta.clone()), psi_rational(&t, &w));
                }
                for (v, (t, w)) in i1_vertices(bm, m).iter().zip(i1_corners(bm, m)) {
                    assert_eq!((v.alpha.clone(), v.beta.clone()), psi_rational(&t, &w));
                }
                let reg = region_i(bm, m).unwrap();
                assert!(reg.edges_consistent() && reg.within_delta());
                let reg = region_i1(bm, m).unwrap();
                assert!(reg.edges_consistent() && reg.within_delta() && reg.is_convex());
            }
        }
    }

    #[test]
    fn psi_v1k_examples() {
        let k1 = region_psi_v1k(1).unwrap();
        assert_eq!(
            set(&k1),
            sorted(vec![(rat(0, 1), rat(1, 2)), (rat(0, 1), rat(2, 3)), (rat(2, 3), rat(1, 3)), (rat(3, 5), rat(2, 5))])
        );
        let k2 = region_psi_v1k(2).unwrap();
        assert_eq!(
            set(&k2),
            sorted(vec![(rat(0, 1), rat(2, 3)), (rat(0, 1), rat(3, 4)), (rat(3, 5), rat(2, 5)), (rat(4, 7), rat(3, 7))])
        );
        let v1 = region_psi_v(1).unwrap();
        let mut prev = rat(1, 1);
        for k in 1..=12 {
            let reg = region_psi_v1k(k).unwrap();
            assert!(reg.edges_consistent() && reg.is_convex());
            let (bottom, top, right) = psi_v1k_lines(k);
            assert!(reg.edges().contains(&bottom) && reg.edges().contains(&top) && reg.edges().contains(&right));
            assert!(reg.edges().contains(&Edge::Vertical { vertical: Rational::zero() }));
            assert!(reg.vertices().iter().all(|v| v1.contains_vertex(v)));
            let a = r(k + 1, 2 * k + 1);
            assert!(a < prev && a > rat(1, 2));
            prev = a;
        }
    }

    #[test]
    fn i1_diagonal_vertices() {
        let reg = region_i1(1, 1).unwrap();
        assert!(reg.vertices().contains(&Vertex::new(rat(6, 13), rat(6, 13))));
        assert!(reg.vertices().contains(&Vertex::new(rat(2, 5), rat(2, 5))));
        for m in 1..=12u64 {
            let vs = i1_vertices(m, m);
            let a = r((m + 1) * (m + 2), (m + 1) * (m + 1) + (m + 2) * (m + 2));
            let b = r(m * (m + 1), m * m + (m + 1) * (m + 1));
            assert_eq!(vs[0], Vertex::new(a.clone(), a));
            assert_eq!(vs[2], Vertex::new(b.clone(), b));
        }
        let pt = psi_rational(&rat(2, 3), &rat(2, 3));
        assert_eq!(pt, (rat(6, 13), rat(6, 13)));
        assert_eq!(i1_vertices(2, 1)[3], Vertex::new(rat(6, 13), rat(6, 13)));
    }

    #[test]
    fn cells() {
        assert_eq!(delta_1k_interval(1).unwrap().to_string(), "(1/2, 2/3)");
        assert_eq!(delta_1k_interval(2).unwrap().to_string(), "[2/3, 3/4)");
        assert_eq!(delta_1k_interval(3).unwrap().to_string(), "[3/4, 4/5)");
        // the family tiles (1/2, 1)
        for k in 1..20 {
            let a = delta_1k_interval(k).unwrap();
            let b = delta_1k_interval(k + 1).unwrap();
            assert_eq!(a.hi, b.lo);
            assert!(!a.hi_closed && b.lo_closed);
        }
        let c = delta_1k_interval(1).unwrap();
        assert!(!c.contains(&QuadSurd::from_rational(&rat(1, 2))));
        assert!(c.contains(&QuadSurd::new(-1, 1, 5, 2).unwrap()));
    }

    #[test]
    fn json_shape() {
        let v = region_psi_v(2).unwrap().to_json();
        assert_eq!(v["vertices"][0], serde_json::json!([["0", "1"], ["1", "2"]]));
        assert_eq!(v["edges"][0], serde_json::json!({"vertical": ["0", "1"]}));
        assert_eq!(v["edges"][1], serde_json::json!({"slope": ["-1", "9"], "intercept": ["1", "3"]}));
        let back: Region = serde_json::from_value(v.clone()).unwrap();
        assert_eq!(back, region_psi_v(2).unwrap());
    }

    #[test]
    fn containment_is_exact_on_boundaries() {
        let reg = region_i(2, 1).unwrap();
        for v in reg.vertices() {
            assert!(reg.contains_vertex(v));
        }
        assert!(!reg.contains_vertex(&Vertex::new(rat(1, 2), rat(1, 2))));
        assert!(Region::delta().contains(&DeltaPoint { alpha: crate::theta::inv_sqrt5(), beta: crate::theta::inv_sqrt5() }));
    }
}
