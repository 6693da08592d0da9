use latpath::checks::*;

fn assert_pass(r: Report) {
    println!("{}", r);
    assert!(r.ok(), "{}", r);
}

#[test]
fn unrestricted_families_and_piecewise_boundaries() {
    assert_pass(plane_misc_suite(6));
}

#[test]
fn binomial_and_q_binomial_identities() {
    assert_pass(binomial_identities(30));
}
