use thicket::graph::Graph;
fn main() {
    let g = Graph::from_edge_list(7, &[(0,2),(0,3),(0,4),(0,6),(1,4),(2,6),(3,4),(4,6),(5,6)]).unwrap();
    println!("unipolar: {:?}", thicket::recognize::unipolar_decompose(&g));
}
