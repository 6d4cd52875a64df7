#ifndef HOMCODE_CODE_FILE_HPP
#define HOMCODE_CODE_FILE_HPP

#include "homcode/code.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace homcode {

using Json = nlohmann::ordered_json;

/// On-disk form of a code: {"name", "notes", "ring", "n", "generators"}.
struct CodeFile {
    std::optional<std::string> name;
    std::optional<std::string> notes;
    RingDescriptor ring;
    std::size_t n = 0;
    std::vector<Word> generators;

    bool operator==(const CodeFile&) const = default;

    LinearCode to_code() const;
    static CodeFile from_code(const LinearCode& code, std::optional<std::string> name = {},
                              std::optional<std::string> notes = {});
};

/// {"family":"Zps","p":5,"s":2} or {"family":"FqXs","p":2,"r":2,"s":2,"field_modulus":[1,1,1]}.
Json ring_to_json(const RingDescriptor& desc);
RingDescriptor ring_from_json(const Json& j);

/// Integer for Z/p^s, s x r coefficient array (x^0 first, low coefficient first) for F_q[x]/(x^s).
Json element_to_json(const ChainRing& ring, RingElement a);
RingElement element_from_json(const ChainRing& ring, const Json& j, const std::string& where);
Json word_to_json(const ChainRing& ring, const Word& w);

/// Field element as an integer (prime field) or r coefficients.
Json field_element_to_json(const Field& field, FieldElement a);

/// Throws Error(Parse) naming the offending field.
CodeFile parse_code_file(const std::string& text);
CodeFile load_code_file(const std::filesystem::path& path);
Json code_file_to_json(const CodeFile& file);
/// Two-space indented JSON with a trailing newline.
std::string serialize_code_file(const CodeFile& file);
void save_code_file(const CodeFile& file, const std::filesystem::path& path);

}  // namespace homcode

#endif
