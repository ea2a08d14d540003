// The t-core generating function and the two theta-type identities it
// satisfies for t = 2 and t = 4.

use corehooks::{
    count_t_cores_up_to, eta_quotient_tcore, theta_triangular, triple_triangular_series,
    verify_identity, PartFilter,
};

pub fn run() -> corehooks::Result<()> {
    let order = 40;
    for t in [2, 3, 4, 5] {
        let series = eta_quotient_tcore(t, order)?;
        println!("t={t}: {:?}", &series.coeffs()[..16]);
        let counted = count_t_cores_up_to(order, t, &PartFilter::none())?;
        let agree = counted
            .iter()
            .enumerate()
            .all(|(n, &c)| series.coeff(n) == Some(i128::from(c)));
        println!("  coefficients count {t}-cores: {agree}");
    }

    let two = verify_identity(&eta_quotient_tcore(2, 200)?, &theta_triangular(200))?;
    println!("2-cores vs sum q^(l(l+1)/2): {two:?}");
    let four = verify_identity(&eta_quotient_tcore(4, 200)?, &triple_triangular_series(200))?;
    println!("4-cores vs triple triangular sum: {four:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> corehooks::Result<()> {
    run()
}
