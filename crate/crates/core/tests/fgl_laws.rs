use genusforge_core::fgl::{catalog, CATALOG};

#[test]
fn catalog_laws_pass_axioms_to_degree_twelve() {
    for name in CATALOG {
        let report = catalog(name, 12).unwrap().check_axioms();
        assert!(report.all_pass(), "{name}: {report:?}");
    }
}
