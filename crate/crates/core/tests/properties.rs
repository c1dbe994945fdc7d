mod common;

#[test]
fn group_axioms() {
    common::group_axioms().unwrap();
}

#[test]
fn lambda_central() {
    common::lambda_central().unwrap();
}

#[test]
fn commutation() {
    common::commutation().unwrap();
}

#[test]
fn reversal_anti_homomorphism() {
    common::reversal_anti_homomorphism().unwrap();
}

#[test]
fn g_prime_composition() {
    common::g_prime_composition().unwrap();
}

#[test]
fn membership_words() {
    common::membership_words().unwrap();
}

#[test]
fn relative_lambda_laws() {
    common::relative_lambda_laws().unwrap();
}
