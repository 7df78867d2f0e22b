"""Algorithms for domenum.

This package contains:
- classify.py: split, chordal, induced-path and co-bipartite recognition
- completion.py: irredundant/redundant labeling and the completion graph
- reductions.py: neighbourhood hypergraphs and incidence graphs
- split_enum.py: DominantSplit and the P6-free chordal extension
- trans_enum.py: Berge transversal enumeration and the domination front doors
- transversal_routes.py: tr(H) through the incidence graphs
- separators.py: minimal separators and connected domination
- domination.py: membership predicates for the enumerated families
- oracles.py: brute-force reference families
- generators.py: seeded random instances
- stream.py: operation counting and delay statistics
"""
