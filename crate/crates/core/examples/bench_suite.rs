use crn_toric::analysis::consistency_suite;
use crn_toric::randomnet::corpus;
use std::time::Instant;

fn main() {
    let nets = corpus(100, 42);
    let t0 = Instant::now();
    let mut worst = Vec::new();
    for (i, net) in nets.iter().enumerate() {
        let t = Instant::now();
        let r = consistency_suite(net);
        let dt = t.elapsed();
        worst.push((dt, i, net.num_species(), net.num_vertices(), net.num_components(), r.all_checks_pass()));
        if t0.elapsed().as_secs() > 240 { println!("aborted at {}", i); break; }
    }
    worst.sort();
    worst.reverse();
    for w in worst.iter().take(8) { println!("{:?}", w); }
    let all_pass = worst.iter().all(|w| w.5);
    println!("total {:?} all_pass={}", t0.elapsed(), all_pass);
}
