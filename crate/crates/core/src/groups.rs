//! Finite groups stored as Cayley tables.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::Caps;

/// A finite group with its full multiplication table and element orders.
///
/// Element `0` is not necessarily the identity; use [`FiniteGroup::identity`].
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    label: String,
    order: usize,
    table: Vec<u16>,
    identity: usize,
    inverse: Vec<usize>,
    element_orders: Vec<usize>,
    names: Vec<String>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish()
    }
}

impl FiniteGroup {
    /// Builds a group from a multiplication closure, checking the group laws
    /// exhaustively.
    fn from_fn(
        label: String,
        names: Vec<String>,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let order = names.len();
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let c = mul(a, b);
                debug_assert!(c < order);
                table.push(c as u16);
            }
        }
        let at = |a: usize, b: usize| table[a * order + b] as usize;
        let identity = (0..order)
            .find(|&e| (0..order).all(|g| at(e, g) == g && at(g, e) == g))
            .ok_or_else(|| Error::InvalidArgument(format!("{label} has no identity")))?;
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(Error::InvalidArgument(format!(
                            "{label} is not associative"
                        )));
                    }
                }
            }
        }
        let mut inverse = Vec::with_capacity(order);
        for g in 0..order {
            let inv = (0..order)
                .find(|&h| at(g, h) == identity && at(h, g) == identity)
                .ok_or_else(|| Error::InvalidArgument(format!("{label} lacks inverses")))?;
            inverse.push(inv);
        }
        let element_orders = (0..order)
            .map(|g| {
                let mut k = 1;
                let mut p = g;
                while p != identity {
                    p = at(p, g);
                    k += 1;
                }
                k
            })
            .collect();
        Ok(FiniteGroup {
            label,
            order,
            table,
            identity,
            inverse,
            element_orders,
            names,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    /// Least `k >= 1` with `g^k` equal to the identity.
    pub fn element_order(&self, g: usize) -> usize {
        self.element_orders[g]
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.element_orders
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    /// `g^k` by repeated multiplication.
    pub fn pow(&self, g: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, g))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The prime `p` if every element order is a power of `p`. The trivial
    /// group is a `p`-group for every `p` and reports `None`.
    pub fn p_group_prime(&self) -> Option<u64> {
        let n = self.order as u64;
        if n == 1 {
            return None;
        }
        let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
        let mut m = n;
        while m.is_multiple_of(p) {
            m /= p;
        }
        (m == 1).then_some(p)
    }

    /// Whether every element order is a power of `p` (vacuously true for the
    /// trivial group).
    pub fn is_p_group(&self, p: u64) -> bool {
        self.element_orders.iter().all(|&o| {
            let mut o = o as u64;
            while o.is_multiple_of(p) {
                o /= p;
            }
            o == 1
        })
    }
}

fn check_cap(what: &'static str, order: u128, caps: &Caps) -> Result<()> {
    if order > caps.group as u128 {
        return Err(Error::cap(what, order, caps.group));
    }
    Ok(())
}

/// The cyclic group `C(m)` generated by `a`.
pub fn cyclic(m: usize, caps: &Caps) -> Result<FiniteGroup> {
    if m == 0 {
        return Err(Error::InvalidArgument("cyclic group of order 0".into()));
    }
    check_cap("cyclic group", m as u128, caps)?;
    let names = (0..m)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "a".to_string(),
            _ => format!("a^{i}"),
        })
        .collect();
    FiniteGroup::from_fn(format!("C({m})"), names, |x, y| (x + y) % m)
}

/// The dihedral group of order `2m`, elements `r^i s^j` at index `i + m*j`.
pub fn dihedral(m: usize, caps: &Caps) -> Result<FiniteGroup> {
    if m == 0 {
        return Err(Error::InvalidArgument("dihedral group D(0)".into()));
    }
    check_cap("dihedral group", 2 * m as u128, caps)?;
    let names = (0..2 * m)
        .map(|idx| {
            let (i, j) = (idx % m, idx / m);
            let r = match i {
                0 => String::new(),
                1 => "r".to_string(),
                _ => format!("r^{i}"),
            };
            match (r.is_empty(), j) {
                (true, 0) => "e".to_string(),
                (false, 0) => r,
                (_, _) => format!("{r}s"),
            }
        })
        .collect();
    FiniteGroup::from_fn(format!("D({m})"), names, |x, y| {
        let (a, b) = (x % m, x / m);
        let (c, d) = (y % m, y / m);
        // s r^c = r^{-c} s
        let rot = if b == 0 { (a + c) % m } else { (a + m - c) % m };
        rot + m * ((b + d) % 2)
    })
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for v in 0..k {
            if !prefix.contains(&v) {
                prefix.push(v);
                go(prefix, k, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), k, &mut out);
    out
}

/// The symmetric group on `k <= 4` points, permutations in lexicographic
/// order of their one-line notation; the product `pq` applies `q` first.
pub fn symmetric(k: usize, caps: &Caps) -> Result<FiniteGroup> {
    if k == 0 || k > 4 {
        return Err(Error::InvalidArgument(format!(
            "symmetric group S({k}) needs 1 <= k <= 4"
        )));
    }
    let perms = permutations(k);
    check_cap("symmetric group", perms.len() as u128, caps)?;
    let names = perms
        .iter()
        .map(|p| {
            let digits: Vec<String> = p.iter().map(|v| (v + 1).to_string()).collect();
            format!("[{}]", digits.join(""))
        })
        .collect();
    let index_of = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
    FiniteGroup::from_fn(format!("S({k})"), names, |x, y| {
        let composed: Vec<usize> = (0..k).map(|i| perms[x][perms[y][i]]).collect();
        index_of(&composed)
    })
}

/// The quaternion group `{±1, ±i, ±j, ±k}`; index `4*sign + unit` with unit
/// order `1, i, j, k`.
pub fn quaternion8(caps: &Caps) -> Result<FiniteGroup> {
    check_cap("quaternion group", 8, caps)?;
    // unit products: (result unit, sign flip)
    const PROD: [[(usize, usize); 4]; 4] = [
        [(0, 0), (1, 0), (2, 0), (3, 0)],
        [(1, 0), (0, 1), (3, 0), (2, 1)],
        [(2, 0), (3, 1), (0, 1), (1, 0)],
        [(3, 0), (2, 0), (1, 1), (0, 1)],
    ];
    let names = ["1", "i", "j", "k"]
        .iter()
        .map(|u| u.to_string())
        .chain(["-1", "-i", "-j", "-k"].iter().map(|u| u.to_string()))
        .collect();
    FiniteGroup::from_fn("Q8".to_string(), names, |x, y| {
        let (sx, ux) = (x / 4, x % 4);
        let (sy, uy) = (y / 4, y % 4);
        let (u, flip) = PROD[ux][uy];
        4 * ((sx + sy + flip) % 2) + u
    })
}

/// Direct product, `(g, h)` at index `g + |G|*h`.
pub fn group_product(g: &FiniteGroup, h: &FiniteGroup, caps: &Caps) -> Result<FiniteGroup> {
    check_cap("group product", g.order as u128 * h.order as u128, caps)?;
    let n = g.order;
    let names = (0..g.order * h.order)
        .map(|i| format!("({},{})", g.name(i % n), h.name(i / n)))
        .collect();
    FiniteGroup::from_fn(format!("{} x {}", g.label, h.label), names, |x, y| {
        g.mul(x % n, y % n) + n * h.mul(x / n, y / n)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAPS: Caps = Caps::DEFAULT;

    fn sorted_orders(g: &FiniteGroup) -> Vec<usize> {
        let mut v = g.element_orders().to_vec();
        v.sort();
        v
    }

    #[test]
    fn cyclic_orders() {
        assert_eq!(sorted_orders(&cyclic(3, &CAPS).unwrap()), vec![1, 3, 3]);
        let c6 = cyclic(6, &CAPS).unwrap();
        assert_eq!(c6.element_order(1), 6);
        assert_eq!(c6.element_order(c6.identity()), 1);
    }

    #[test]
    fn symmetric_three() {
        let s3 = symmetric(3, &CAPS).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(sorted_orders(&s3), vec![1, 2, 2, 2, 3, 3]);
        // [213] swaps the first two points
        let t = (0..6).find(|&g| s3.name(g) == "[213]").unwrap();
        assert_eq!(s3.element_order(t), 2);
        assert!(!s3.is_abelian());
        assert_eq!(symmetric(4, &CAPS).unwrap().order(), 24);
    }

    #[test]
    fn symmetric_rejects_large() {
        assert!(matches!(
            symmetric(5, &CAPS),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn quaternion_orders() {
        let q = quaternion8(&CAPS).unwrap();
        assert_eq!(sorted_orders(&q), vec![1, 2, 4, 4, 4, 4, 4, 4]);
        assert!(!q.is_abelian());
        assert_eq!(q.p_group_prime(), Some(2));
    }

    #[test]
    fn dihedral_shape() {
        let d4 = dihedral(4, &CAPS).unwrap();
        assert_eq!(d4.order(), 8);
        assert_eq!(sorted_orders(&d4), vec![1, 2, 2, 2, 2, 2, 4, 4]);
        assert!(!d4.is_abelian());
        assert!(dihedral(1, &CAPS).unwrap().is_abelian());
    }

    #[test]
    fn product_orders_are_lcm() {
        let g = cyclic(4, &CAPS).unwrap();
        let h = cyclic(6, &CAPS).unwrap();
        let p = group_product(&g, &h, &CAPS).unwrap();
        for x in 0..p.order() {
            let a = g.element_order(x % 4);
            let b = h.element_order(x / 4);
            assert_eq!(
                p.element_order(x),
                crate::fastpath::lcm(a as u64, b as u64) as usize
            );
        }
    }

    #[test]
    fn cap_enforced() {
        let c = cyclic(8, &CAPS).unwrap();
        let c9 = cyclic(9, &CAPS).unwrap();
        assert!(group_product(&c, &c9, &CAPS).unwrap_err().is_cap());
        assert!(cyclic(65, &CAPS).unwrap_err().is_cap());
    }

    #[test]
    fn p_groups() {
        assert!(cyclic(8, &CAPS).unwrap().is_p_group(2));
        assert!(!symmetric(3, &CAPS).unwrap().is_p_group(2));
        assert_eq!(cyclic(9, &CAPS).unwrap().p_group_prime(), Some(3));
        assert_eq!(cyclic(6, &CAPS).unwrap().p_group_prime(), None);
    }

    #[test]
    fn powers_reach_identity_exactly_at_order() {
        for g in [
            symmetric(4, &CAPS).unwrap(),
            quaternion8(&CAPS).unwrap(),
            dihedral(5, &CAPS).unwrap(),
        ] {
            for x in 0..g.order() {
                let k = g.element_order(x);
                assert_eq!(g.pow(x, k), g.identity());
                assert!((1..k).all(|j| g.pow(x, j) != g.identity()));
                assert_eq!(g.order() % k, 0);
                assert_eq!(g.mul(x, g.inverse(x)), g.identity());
            }
        }
    }
}
