use crate::ring::{Monomial, RingElement};
use crate::series::MSeries;
use crate::symfun::{basis_degree, Basis, SymPoly};

/// `b_0, …, b_order` evaluated on the roots `x_1, …, x_m`, straight from the
/// definitions of the three bases.
pub fn root_polynomials(basis: Basis, m: usize, order: usize) -> Vec<MSeries> {
    let one = MSeries::one(m, order);
    let x: Vec<MSeries> = (0..m).map(|i| MSeries::var(m, order, i)).collect();
    match basis {
        Basis::P => (0..=order)
            .map(|k| {
                if k == 0 {
                    // s_0 = m is never used as a generator; keep the basis-1 convention
                    return one.clone();
                }
                let mut acc = MSeries::zero(m, order);
                for i in 0..m {
                    let mut e = vec![0u32; m];
                    e[i] = k as u32;
                    let mut mono = MSeries::zero(m, order);
                    mono.set(e, RingElement::one());
                    acc = &acc + &mono;
                }
                acc
            })
            .collect(),
        Basis::E => {
            // Π (1 + x_i y), kept as the list of y-coefficients
            let mut e = vec![one.clone()];
            e.resize(order + 1, MSeries::zero(m, order));
            for xi in &x {
                for k in (1..=order).rev() {
                    let add = &e[k - 1] * xi;
                    e[k] = &e[k] + &add;
                }
            }
            e
        }
        Basis::H => {
            // h_k(x_1..x_i) = Σ_j x_i^j h_{k−j}(x_1..x_{i−1}) = h_k(..x_{i−1}) + x_i h_{k−1}(..x_i)
            let mut h = vec![one.clone()];
            h.resize(order + 1, MSeries::zero(m, order));
            for xi in &x {
                for k in 1..=order {
                    let add = &h[k - 1] * xi;
                    h[k] = &h[k] + &add;
                }
            }
            h
        }
    }
}

/// Substitutes root expressions for every `basis` generator of `x`; other
/// generators stay in the coefficients. Truncates at total root degree `order`.
pub fn expand_element_in_roots(x: &RingElement, basis: Basis, m: usize, order: usize) -> MSeries {
    let roots = root_polynomials(basis, m, order);
    let mut out = MSeries::zero(m, order);
    for (mono, c) in x.terms() {
        let mut acc = MSeries::one(m, order);
        let mut rest = Vec::new();
        for &(g, e) in mono.factors() {
            match basis.index_of(g) {
                Some(n) if (n as usize) <= order => {
                    for _ in 0..e {
                        acc = &acc * &roots[n as usize];
                    }
                }
                Some(_) => acc = MSeries::zero(m, order),
                None => rest.push((g, e)),
            }
        }
        let coeff = RingElement::term(Monomial::new(rest).expect("valid factors"), c.clone());
        out.add_scaled(&acc, &coeff);
    }
    out
}

/// `x(x_1, …, x_m)` as a polynomial in `m` roots.
pub fn expand_in_roots(x: &SymPoly, m: usize) -> MSeries {
    expand_element_in_roots(x.poly(), x.basis(), m, basis_degree(x.poly(), x.basis()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn definitions() {
        let e2 = expand_in_roots(&SymPoly::gen(Basis::E, 2), 3);
        assert_eq!(e2.iter().count(), 3);
        assert_eq!(e2.get(&[1, 1, 0]), RingElement::one());
        assert_eq!(e2.get(&[0, 1, 1]), RingElement::one());
        assert_eq!(e2.get(&[2, 0, 0]), RingElement::zero());

        let s2 = expand_in_roots(&SymPoly::gen(Basis::P, 2), 2);
        assert_eq!(s2.iter().count(), 2);
        assert_eq!(s2.get(&[2, 0]), RingElement::one());

        let h2 = expand_in_roots(&SymPoly::gen(Basis::H, 2), 2);
        assert_eq!(h2.iter().count(), 3);
        assert_eq!(h2.get(&[1, 1]), RingElement::one());
    }

    #[test]
    fn newton_identity_at_two_roots() {
        let poly = SymPoly::gen(Basis::P, 2).convert(Basis::E);
        assert_eq!(
            expand_in_roots(&poly, 2),
            expand_in_roots(&SymPoly::gen(Basis::P, 2), 2)
        );
    }
}
