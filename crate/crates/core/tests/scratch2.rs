use atlas_core::*;

#[test]
fn ex43_power_rasters() {
    let f = parse_polynomial("x + x^2 + y + x*y^3 + x^4*y^2 + 3*x^3*y + 10*x*y + 10*x^2*y + 10*x*y^2 + 15*x^2*y^2 + 10*x^3*y^2").unwrap();
    for r in [2.0f64, 3.0] {
        let fr = f.hadamard_power(r).unwrap();
        let opts = ClassifyOptions {
            resolution: [500, 500],
            thetas: 192,
            ..Default::default()
        };
        let w = auto_window(&fr).unwrap();
        let labeled = amoeba::labeled_components_pub(&fr, &w, &opts).unwrap();
        println!("r={}: {} components", r, labeled.summaries.len());
        for c in &labeled.summaries {
            println!("  rep=[{:.2},{:.2}] cells={} bounded={} order={:?}",
                c.representative[0], c.representative[1], c.cell_count, c.bounded, c.order);
        }
    }
}
