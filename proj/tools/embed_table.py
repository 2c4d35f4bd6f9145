#!/usr/bin/env python3
"""Regenerate include/rankcorr/bundled_table.hpp from data/parameter_table.json."""
import pathlib
import sys

root = pathlib.Path(__file__).resolve().parent.parent
src = root / "data" / "parameter_table.json"
dst = root / "include" / "rankcorr" / "bundled_table.hpp"

text = src.read_text()
delim = "RANKCORR_TABLE"
if f'){delim}"' in text:
    sys.exit("delimiter collision")

dst.write_text(f'''#pragma once

// Generated by tools/embed_table.py from data/parameter_table.json. Do not edit.

#include <string_view>

#include "table.hpp"

namespace rankcorr {{

inline constexpr std::string_view kBundledTableJson = R"{delim}({text}){delim}";

/// The published parameter table, parsed once.
inline const ParameterTable& bundled_table() {{
  static const ParameterTable table = load_table(kBundledTableJson);
  return table;
}}

}}  // namespace rankcorr
''')
