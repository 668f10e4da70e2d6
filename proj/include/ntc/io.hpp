#pragma once

#include <iosfwd>
#include <string>

#include "ntc/analyze.hpp"
#include "ntc/codes.hpp"
#include "ntc/group.hpp"
#include "ntc/hamming.hpp"
#include "ntc/wreath.hpp"

namespace ntc {

/// Permutation from `(0 1 2)(3 4)` cycle notation or a whitespace-separated
/// image list.
Permutation parse_permutation(const std::string& text, int degree);

PermGroup read_group(std::istream& in);
void write_group(std::ostream& out, const PermGroup& g);

Code read_code(std::istream& in);
void write_code(std::ostream& out, const Code& c);

PairedAction read_paired_action(std::istream& in);
void write_paired_action(std::ostream& out, const PairedAction& pa);

WreathGroup read_wreath_group(std::istream& in);
void write_wreath_group(std::ostream& out, const WreathGroup& x);

nlohmann::json wreath_element_json(const WreathElement& x);
WreathElement wreath_element_from_json(const nlohmann::json& j);

PermGroup read_group_file(const std::string& path);
Code read_code_file(const std::string& path);
PairedAction read_paired_action_file(const std::string& path);
WreathGroup read_wreath_group_file(const std::string& path);
void write_group_file(const std::string& path, const PermGroup& g);
void write_code_file(const std::string& path, const Code& c);
void write_paired_action_file(const std::string& path, const PairedAction& pa);
void write_wreath_group_file(const std::string& path, const WreathGroup& x);

}  // namespace ntc
