use proptest::prelude::*;
use zforce::graph6::{decode, encode, Graph6Error};
use zforce_core::generators::{enumerate_connected_claw_free_cubic, necklace};
use zforce_core::Graph;

fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
            move |bits| {
                let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                let edges: Vec<_> = pairs
                    .zip(bits)
                    .filter(|(_, b)| *b)
                    .map(|(e, _)| e)
                    .collect();
                Graph::from_edge_list(n, edges).unwrap()
            },
        )
    })
}

proptest! {
    #[test]
    fn round_trip(g in any_graph(70)) {
        let text = encode(&g);
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(decode(&text).unwrap(), g);
    }

    #[test]
    fn garbage_never_panics(bytes in proptest::collection::vec(any::<u8>(), 0..40)) {
        let _ = decode(&String::from_utf8_lossy(&bytes));
    }
}

#[test]
fn lone_escape_byte_is_a_bad_header() {
    assert_eq!(decode("~"), Err(Graph6Error::MalformedHeader));
    assert_eq!(decode("~~"), Err(Graph6Error::MalformedHeader));
}

#[test]
fn corpus_round_trips() {
    for g in enumerate_connected_claw_free_cubic(14).unwrap() {
        assert_eq!(decode(&encode(&g)).unwrap(), g);
    }
    let big = necklace(20).unwrap();
    assert_eq!(encode(&big).as_bytes()[0], 126);
    assert_eq!(decode(&encode(&big)).unwrap(), big);
}
