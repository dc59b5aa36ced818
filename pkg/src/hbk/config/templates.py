# Default config template
DEFAULT_CONFIG_TEMPLATE = """{{
  "field": {{
    "p": {p},
    "f": "{f}",
    "s": "{s}",
    "m": {m}
  }},

  "limits": {{
    "flow_cap": {flow_cap},
    "brute_cap": {brute_cap}
  }},

  "run": {{
    "jobs": {jobs},
    "seed": {seed},
    "samples": {samples}
  }}
}}
"""
