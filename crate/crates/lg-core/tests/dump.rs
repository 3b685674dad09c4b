#[test]
fn export_tables() {
    for m in 1..=4u8 {
        std::fs::write(
            format!("/tmp/tables_m{}.json", m),
            lg_core::statemodel::export_tables_json(m),
        )
        .unwrap();
    }
}
