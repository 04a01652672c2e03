#ifndef VALENCE_IO_HPP_
#define VALENCE_IO_HPP_

#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "valence/automata.hpp"
#include "valence/grammar.hpp"
#include "valence/monoid.hpp"
#include "valence/rational.hpp"

namespace valence {

  using Json = nlohmann::json;

  enum class DocumentKind { Monoid, Nfa, Rma, Pda, Grammar };

  char const*  to_string(DocumentKind k) noexcept;
  DocumentKind document_kind_from_string(std::string const& s);

  // A machine description file: {"kind": ..., "name": ..., "comment": ...}
  // plus the fields of the payload.
  struct SpecDocument {
    using Payload = std::variant<MonoidDescriptor,
                                 ValenceNFA,
                                 RationalMonoidAutomaton,
                                 ValencePDA,
                                 ValenceGrammar>;

    std::string name;
    std::string comment;
    Payload     payload;

    DocumentKind kind() const noexcept {
      return static_cast<DocumentKind>(payload.index());
    }

    bool operator==(SpecDocument const&) const = default;
  };

  // Throws ParseError (with line and column) for malformed JSON and
  // SemanticError, naming the offending field, for invalid content.
  SpecDocument parse_spec(std::string_view text);
  SpecDocument load_spec(std::string const& path);

  Json        to_json(SpecDocument const& doc);
  std::string dump_spec(SpecDocument const& doc);
  void        save_spec(SpecDocument const& doc, std::string const& path);

  // Pieces of the format, usable on their own.
  Json to_json(MonoidDescriptor const& desc);
  Json to_json(MonoidDescriptor const& desc, MonoidElement const& e);
  Json to_json(MonoidDescriptor const& desc, RationalExpr const& e);

  MonoidDescriptor descriptor_from_json(Json const& j);
  MonoidElement    element_from_json(MonoidDescriptor const& desc, Json const& j);
  RationalExpr     expr_from_json(MonoidDescriptor const& desc, Json const& j);

}  // namespace valence

#endif  // VALENCE_IO_HPP_
