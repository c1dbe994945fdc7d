//! Fixture files compiled into the library, addressable by file name.

pub const TREFOIL_M2_CFD: &str = include_str!("../fixtures/trefoil_m2.cfd.json");
pub const UNKNOT_M2_CFD: &str = include_str!("../fixtures/unknot_m2.cfd.json");
pub const SOLID_TORUS_INF_CFA: &str = include_str!("../fixtures/solid_torus_inf.cfa.json");
pub const TWO_BIGON: &str = include_str!("../fixtures/two_bigon.json");
pub const LENS_2_1: &str = include_str!("../fixtures/lens_2_1.json");

pub const ALL: &[(&str, &str)] = &[
    ("trefoil_m2.cfd.json", TREFOIL_M2_CFD),
    ("unknot_m2.cfd.json", UNKNOT_M2_CFD),
    ("solid_torus_inf.cfa.json", SOLID_TORUS_INF_CFA),
    ("two_bigon.json", TWO_BIGON),
    ("lens_2_1.json", LENS_2_1),
];

pub fn by_name(name: &str) -> Option<&'static str> {
    ALL.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}
