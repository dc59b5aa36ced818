# ruff: noqa: E501
# Diagram templates

UNKNOT_TEMPLATE = """{
  "name": "unknot",
  "crossings": [
    {"id": "c1", "sign": 1, "under_in": "x", "under_out": "y", "over_in": "y", "over_out": "x"}
  ],
  "vertices": []
}
"""

E_TEMPLATE = """{
  "name": "E",
  "crossings": [
    {"id": "c1", "sign": 1, "under_in": "x4", "under_out": "x1", "over_in": "x2", "over_out": "x3"},
    {"id": "c2", "sign": 1, "under_in": "x6", "under_out": "x2", "over_in": "x7", "over_out": "x4"}
  ],
  "vertices": [
    {"id": "V1", "slots": [
      {"semi_arc": "x5", "dir": "out"}, {"semi_arc": "x1", "dir": "in"}, {"semi_arc": "x3", "dir": "in"}
    ]},
    {"id": "V2", "slots": [
      {"semi_arc": "x5", "dir": "in"}, {"semi_arc": "x6", "dir": "out"}, {"semi_arc": "x7", "dir": "out"}
    ]}
  ]
}
"""

HANDCUFF_TEMPLATE = """{
  "name": "handcuff",
  "crossings": [
    {"id": "c1", "sign": 1, "under_in": "l1", "under_out": "l2", "over_in": "l2", "over_out": "l3"}
  ],
  "vertices": [
    {"id": "A", "slots": [
      {"semi_arc": "b", "dir": "out"}, {"semi_arc": "l1", "dir": "out"}, {"semi_arc": "l3", "dir": "in"}
    ]},
    {"id": "B", "slots": [
      {"semi_arc": "r1", "dir": "in"}, {"semi_arc": "b", "dir": "in"}, {"semi_arc": "r1", "dir": "out"}
    ]}
  ]
}
"""

TREFOIL_TEMPLATE = """{
  "name": "trefoil",
  "crossings": [
    {"id": "c1", "sign": 1, "under_in": "r3", "under_out": "l1", "over_in": "l3", "over_out": "r1"},
    {"id": "c2", "sign": 1, "under_in": "r1", "under_out": "l2", "over_in": "l1", "over_out": "r2"},
    {"id": "c3", "sign": 1, "under_in": "r2", "under_out": "l3", "over_in": "l2", "over_out": "r3"}
  ],
  "vertices": []
}
"""
