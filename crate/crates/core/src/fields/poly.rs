//! Elem-level polynomial algorithms: separability, irreducibility over finite
//! towers (Frobenius-power criterion), Eisenstein/specialization certificates
//! over one transcendental layer, and squarefree decomposition in
//! characteristic 2.

use super::elem::{self, Elem, Layer};
use crate::error::{Error, Result};

/// gcd(f, f') has degree 0.
pub(crate) fn is_separable(c: &[Layer], f: &[Elem]) -> bool {
    let d = elem::pderiv(c, f);
    if d.is_empty() {
        return false;
    }
    elem::pgcd(c, f, &d).map_or(false, |g| elem::pdeg(&g) == Some(0))
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// x^(2^k) mod f by repeated squaring.
fn frobenius_power_mod(c: &[Layer], f: &[Elem], k: usize) -> Vec<Elem> {
    let x = vec![elem::zero(c), elem::one(c)];
    let mut acc = elem::prem(c, &x, f);
    for _ in 0..k {
        let sq = elem::pmul(c, &acc, &acc);
        acc = elem::prem(c, &sq, f);
    }
    acc
}

/// Exact irreducibility over a finite tower with q = 2^dim elements:
/// x^(q^n) = x mod f, and gcd(x^(q^(n/l)) - x, f) = 1 for every prime l | n.
pub(crate) fn is_irreducible_finite(c: &[Layer], f: &[Elem]) -> bool {
    let n = match elem::pdeg(f) {
        Some(n) if n >= 1 => n,
        _ => return false,
    };
    if n == 1 {
        return true;
    }
    let f = elem::pmonic(c, f);
    let dim = elem::finite_dim(c).expect("finite tower");
    let x = vec![elem::zero(c), elem::one(c)];
    let x_qn = frobenius_power_mod(c, &f, dim * n);
    if x_qn != elem::prem(c, &x, &f) {
        return false;
    }
    for l in prime_factors(n) {
        let g = frobenius_power_mod(c, &f, dim * (n / l));
        let diff = elem::padd(c, &g, &elem::prem(c, &x, &f));
        if diff.is_empty() {
            return false;
        }
        let gc = elem::pgcd(c, &diff, &f).expect("nonzero gcd inputs");
        if elem::pdeg(&gc) != Some(0) {
            return false;
        }
    }
    true
}

/// Monic irreducible polynomials of the given degree over a finite tower,
/// in lexicographic coefficient order.
pub(crate) fn irreducibles_of_degree(c: &[Layer], deg: usize) -> Vec<Vec<Elem>> {
    let mut out = Vec::new();
    let elems = elem::enumerate(c);
    let mut stack: Vec<Vec<Elem>> = vec![Vec::new()];
    for _ in 0..deg {
        let mut next = Vec::with_capacity(stack.len() * elems.len());
        for prefix in &stack {
            for e in &elems {
                let mut v = prefix.clone();
                v.push(e.clone());
                next.push(v);
            }
        }
        stack = next;
    }
    for low in stack {
        let mut f = low;
        f.push(elem::one(c));
        if is_irreducible_finite(c, &f) {
            out.push(f);
        }
    }
    out
}

/// Squarefree decomposition over a finite tower in characteristic 2:
/// f = prod g_i^(m_i) with the g_i monic, squarefree and pairwise coprime.
pub(crate) fn squarefree_decomposition(c: &[Layer], f: &[Elem]) -> Vec<(Vec<Elem>, usize)> {
    let f = elem::pmonic(c, f);
    let mut out = Vec::new();
    sqf_rec(c, &f, 1, &mut out);
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    out
}

fn sqf_rec(c: &[Layer], f: &[Elem], scale: usize, out: &mut Vec<(Vec<Elem>, usize)>) {
    if elem::pdeg(f).map_or(true, |d| d == 0) {
        return;
    }
    let fp = elem::pderiv(c, f);
    if fp.is_empty() {
        // f is a square: halve it and double the multiplicities
        let h = elem::psqrt(c, f).expect("derivative zero implies square");
        sqf_rec(c, &h, scale * 2, out);
        return;
    }
    let g = elem::pgcd(c, f, &fp).expect("nonzero inputs");
    let h = elem::pdiv_exact(c, f, &g); // radical of the odd-multiplicity part
    let mut hh = h;
    let mut rr = g;
    let mut k = 1usize;
    while elem::pdeg(&hh).map_or(false, |d| d >= 1) {
        let shared = elem::pgcd(c, &hh, &rr).expect("nonzero inputs");
        let exact = elem::pdiv_exact(c, &hh, &shared);
        if elem::pdeg(&exact).map_or(false, |d| d >= 1) {
            out.push((exact, k * scale));
        }
        rr = elem::pdiv_exact(c, &rr, &shared);
        hh = shared;
        k += 1;
    }
    if elem::pdeg(&rr).map_or(false, |d| d >= 1) {
        sqf_rec(c, &rr, scale, out);
    }
}

/// Three-valued irreducibility over a tower whose top layer is transcendental.
///
/// `full` is the whole tower (finite layers + the transcendental layer);
/// the polynomial has Frac coefficients. Tries, in order: Eisenstein at a
/// low-degree prime of the denominator-cleared form, specialization of the
/// variable into the finite base, then a bounded search for linear factors.
pub(crate) fn irreducibility_function_field(full: &[Layer], f: &[Elem]) -> Trilean {
    let fin = &full[..full.len() - 1];
    let n = match elem::pdeg(f) {
        Some(n) if n >= 1 => n,
        _ => return Trilean::False,
    };
    if n == 1 {
        return Trilean::True;
    }
    let f = elem::pmonic(full, f);

    // clear denominators: F(t)[x] -> F[t][x], then make primitive
    let mut common_den: Vec<Elem> = vec![elem::one(fin)];
    for coeff in &f {
        let Elem::Frac(_, d) = coeff else { unreachable!() };
        let g = elem::pgcd(fin, &common_den, d).expect("nonzero");
        common_den = elem::pmul(fin, &common_den, &elem::pdiv_exact(fin, d, &g));
    }
    let mut cleared: Vec<Vec<Elem>> = Vec::with_capacity(f.len());
    for coeff in &f {
        let Elem::Frac(num, den) = coeff else {
            unreachable!()
        };
        let scale = elem::pdiv_exact(fin, &common_den, den);
        cleared.push(elem::pmul(fin, num, &scale));
    }
    let mut content: Vec<Elem> = Vec::new();
    for coeff in &cleared {
        if coeff.is_empty() {
            continue;
        }
        content = if content.is_empty() {
            elem::pmonic(fin, coeff)
        } else {
            elem::pgcd(fin, &content, coeff).expect("nonzero")
        };
    }
    if elem::pdeg(&content).map_or(false, |d| d >= 1) {
        for coeff in &mut cleared {
            *coeff = elem::pdiv_exact(fin, coeff, &content);
        }
    }

    // Eisenstein at primes of degree <= 2 dividing every non-leading coefficient
    let dim = elem::finite_dim(fin).expect("finite base below transcendental");
    if dim <= 8 {
        let mut candidates = irreducibles_of_degree(fin, 1);
        if dim <= 4 {
            candidates.extend(irreducibles_of_degree(fin, 2));
        }
        'prime: for pi in &candidates {
            for coeff in cleared.iter().take(n) {
                if !elem::prem(fin, coeff, pi).is_empty() {
                    continue 'prime;
                }
            }
            if !elem::prem(fin, &cleared[n], pi).is_empty()
                && !elem::prem(fin, &cleared[0], &elem::pmul(fin, pi, pi)).is_empty()
            {
                return Trilean::True;
            }
        }
    }

    // specialization: substitute each constant for the variable
    if dim <= 8 {
        for c0 in elem::enumerate(fin) {
            let lead = elem::peval(fin, &cleared[n], &c0);
            if elem::is_zero(&lead) {
                continue;
            }
            let spec: Vec<Elem> = cleared
                .iter()
                .map(|coeff| elem::peval(fin, coeff, &c0))
                .collect();
            let spec = elem::ptrim(spec);
            if elem::pdeg(&spec) == Some(n) && is_irreducible_finite(fin, &spec) {
                return Trilean::True;
            }
        }
    }

    // bounded search for a root u/v, deg u <= 2, v monic of degree <= 1
    if dim <= 4 {
        let consts = elem::enumerate(fin);
        let mut numerators: Vec<Vec<Elem>> = vec![Vec::new()];
        for _ in 0..3 {
            let mut next = Vec::new();
            for prefix in &numerators {
                for e in &consts {
                    let mut v = prefix.clone();
                    v.push(e.clone());
                    next.push(v);
                }
            }
            numerators = next;
        }
        let mut denominators: Vec<Vec<Elem>> = vec![vec![elem::one(fin)]];
        for e in &consts {
            denominators.push(vec![e.clone(), elem::one(fin)]);
        }
        for num in &numerators {
            let num = elem::ptrim(num.clone());
            for den in &denominators {
                if num.is_empty() && elem::pdeg(den) != Some(0) {
                    continue;
                }
                let cand = elem::frac_normalized(fin, num.clone(), den.clone());
                if elem::is_zero(&elem::peval(full, &f, &cand)) {
                    return Trilean::False;
                }
            }
        }
    }

    Trilean::Unknown
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Trilean {
    True,
    False,
    Unknown,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> Vec<Layer> {
        Vec::new()
    }

    fn bitpoly(bits: &[u8]) -> Vec<Elem> {
        elem::ptrim(bits.iter().map(|&b| Elem::Bit(b == 1)).collect())
    }

    #[test]
    fn quartic_fixture_is_irreducible() {
        let f = bitpoly(&[1, 0, 0, 1, 1]); // x^4+x^3+1
        assert!(is_irreducible_finite(&gf2(), &f));
    }

    #[test]
    fn square_is_not_irreducible() {
        let f = bitpoly(&[1, 0, 1]); // x^2+1 = (x+1)^2
        assert!(!is_irreducible_finite(&gf2(), &f));
        assert!(!is_separable(&gf2(), &f));
    }

    #[test]
    fn irreducible_counts_match_necklace_formula() {
        // (1/d) sum_{e | d} mu(e) 2^(d/e)
        let expected = [2usize, 1, 2, 3, 6, 9];
        for (i, &want) in expected.iter().enumerate() {
            let got = irreducibles_of_degree(&gf2(), i + 1).len();
            assert_eq!(got, want, "degree {}", i + 1);
        }
    }

    #[test]
    fn squarefree_decomposition_char2() {
        let c = gf2();
        // f = t^3 (t+1)^2 (t^2+t+1)
        let t = bitpoly(&[0, 1]);
        let t1 = bitpoly(&[1, 1]);
        let q = bitpoly(&[1, 1, 1]);
        let mut f = elem::pmul(&c, &t, &t);
        f = elem::pmul(&c, &f, &t);
        f = elem::pmul(&c, &f, &t1);
        f = elem::pmul(&c, &f, &t1);
        f = elem::pmul(&c, &f, &q);
        let d = squarefree_decomposition(&c, &f);
        assert_eq!(
            d,
            vec![(q.clone(), 1), (t1.clone(), 2), (t.clone(), 3)]
        );
    }

    #[test]
    fn squarefree_decomposition_of_perfect_square() {
        let c = gf2();
        let t1 = bitpoly(&[1, 1]);
        let f = elem::pmul(&c, &elem::pmul(&c, &t1, &t1), &elem::pmul(&c, &t1, &t1));
        let d = squarefree_decomposition(&c, &f);
        assert_eq!(d, vec![(t1, 4)]);
    }

    #[test]
    fn eisenstein_certifies_radical_modulus() {
        // x^3 + t over GF(2)(t)
        let full = vec![Layer::Transcendental { name: "t".into() }];
        let t = Elem::Frac(bitpoly(&[0, 1]), bitpoly(&[1]));
        let f = vec![
            t,
            elem::zero(&full),
            elem::zero(&full),
            elem::one(&full),
        ];
        assert_eq!(irreducibility_function_field(&full, &f), Trilean::True);
    }

    #[test]
    fn root_search_refutes_square() {
        // x^2 + t^2 = (x + t)^2 over GF(2)(t)
        let full = vec![Layer::Transcendental { name: "t".into() }];
        let t2 = Elem::Frac(bitpoly(&[0, 0, 1]), bitpoly(&[1]));
        let f = vec![t2, elem::zero(&full), elem::one(&full)];
        assert_eq!(irreducibility_function_field(&full, &f), Trilean::False);
    }
}
