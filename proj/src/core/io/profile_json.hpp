#pragma once

#include <string>

#include "../profile.hpp"

namespace helmscat::io {

// Parses {"kind": "...", ...}; throws ParseError with the offending field
// path, or ValidationError from profile construction.
Profile profile_from_json(const std::string& text);
Profile profile_from_file(const std::string& path);

std::string profile_to_json(const Profile& p);

}  // namespace helmscat::io
