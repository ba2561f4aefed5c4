use crate::freealg::{FreeAlgError, NCPoly, RewriteSystem, Word};

/// Exterior derivative without reduction: the graded derivation with
/// `d x = dx`, `d y = dy`, `d dx = d dy = 0`, picking up a sign for each odd
/// letter it passes.
pub fn exterior_d_free(poly: &NCPoly) -> Result<NCPoly, FreeAlgError> {
    let mut out = NCPoly::zero();
    for (w, c) in poly.terms() {
        let letters = w.letters();
        let mut odd = false;
        for (i, &g) in letters.iter().enumerate() {
            if g.is_group() {
                return Err(FreeAlgError::NotAForm(g));
            }
            if let Some(dg) = g.differential() {
                let mut v = letters.to_vec();
                v[i] = dg;
                let sign = if odd { -c } else { c.clone() };
                out.add_term(Word::new(v), sign);
            }
            odd ^= g.parity() == 1;
        }
    }
    Ok(out)
}

/// Exterior derivative, normal-ordered under `rules`.
pub fn exterior_d(poly: &NCPoly, rules: &RewriteSystem) -> Result<NCPoly, FreeAlgError> {
    rules.normal_order(&exterior_d_free(poly)?)
}
