use crate::lerch_ml::{lerch_pq, LerchArgs};
use crate::numeric::{cr, Complex, EvalOutcome};
use crate::{Error, Policy, Result};

/// S^{(2,1)}_{2,ν,τ,ω}(r; k; p, q; z) = [Φ_{ν,τ,ω}(z, 2, −ir) − Φ_{ν,τ,ω}(z, 2, ir)] / (2ir).
#[allow(clippy::too_many_arguments)]
pub fn mathieu_via_lerch(
    r: f64,
    nu: f64,
    tau: f64,
    omega: f64,
    z: Complex,
    p: Complex,
    q: Complex,
    policy: &Policy,
) -> Result<EvalOutcome> {
    if !(r > 0.0) {
        return Err(Error::param("r", "must be positive"));
    }
    if z == cr(0.0) {
        return Ok(EvalOutcome::exact(cr(0.0)));
    }
    let at = |a: Complex| LerchArgs {
        lambda: cr(nu),
        mu: cr(tau),
        nu: cr(omega),
        z,
        s: cr(2.0),
        a,
        p,
        q,
    };
    let ir = Complex::new(0.0, r);
    let minus = lerch_pq(&at(-ir), policy)?;
    let plus = lerch_pq(&at(ir), policy)?;
    Ok(minus.minus(plus).scaled(cr(1.0) / (2.0 * ir)))
}
