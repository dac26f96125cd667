#include "sctlint/signature.hpp"

namespace sctlint {

std::string_view to_string(Level level) {
  switch (level) {
    case Level::ObjectFun: return "ObjectFun";
    case Level::TypeConst: return "TypeConst";
    case Level::TypeFun: return "TypeFun";
  }
  return "Unknown";
}

void Signature::add(SymbolInfo info) {
  if (contains(info.name)) {
    throw Error(ErrorKind::DuplicateDeclaration, info.pos,
                "symbol '" + info.name + "' is already declared");
  }
  index_.emplace(info.name, symbols_.size());
  symbols_.push_back(std::move(info));
}

const SymbolInfo* Signature::find(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  return it == index_.end() ? nullptr : &symbols_[it->second];
}

const SymbolInfo& Signature::at(std::string_view name) const {
  if (const auto* info = find(name)) return *info;
  throw Error(ErrorKind::UnknownSymbol, {}, "undeclared symbol '" + std::string(name) + "'");
}

bool Signature::is_constructor(std::string_view name) const {
  const auto* info = find(name);
  return info && info->is_constructor;
}

bool Signature::is_function_symbol(std::string_view name) const {
  const auto* info = find(name);
  return info && info->level != Level::TypeConst;
}

void Signature::mark_definable(std::string_view name) {
  const auto it = index_.find(std::string(name));
  if (it != index_.end()) symbols_[it->second].definable = true;
}

void Signature::finalize_constructors() {
  for (auto& s : symbols_) {
    s.is_constructor = s.level == Level::ObjectFun && classify_constructor(s, *this);
  }
}

ProductTelescope decompose_product(const Term& type) {
  ProductTelescope tel{{}, type};
  while (tel.codomain.is(TermKind::Product)) {
    tel.domains.push_back(tel.codomain.domain());
    tel.codomain = tel.codomain.codomain();
  }
  return tel;
}

std::size_t arity_of(const Term& declared_type) {
  std::size_t n = 0;
  for (Term t = declared_type; t.is(TermKind::Product); t = t.codomain()) ++n;
  return n;
}

Level level_of(const Term& declared_type, bool def_flag) {
  if (!decompose_product(declared_type).codomain.is(TermKind::Sort)) return Level::ObjectFun;
  return def_flag ? Level::TypeFun : Level::TypeConst;
}

namespace {

// `E v1 ... vk` with E a type constant and k = arity(E).
bool is_saturated_type_constant(const Term& type, const Signature& sig) {
  const Spine s = spine_of(type);
  if (!s.head.is(TermKind::Symbol)) return false;
  const SymbolInfo& head = sig.at(s.head.name());
  return head.level == Level::TypeConst && s.args.size() == head.arity;
}

}  // namespace

bool classify_constructor(const SymbolInfo& symbol, const Signature& sig) {
  if (symbol.level != Level::ObjectFun) return false;
  const ProductTelescope tel = decompose_product(symbol.declared_type);
  for (const Term& domain : tel.domains) {
    if (!is_saturated_type_constant(domain, sig)) return false;
  }
  return is_saturated_type_constant(tel.codomain, sig);
}

bool is_pattern(const Term& t, const Signature& sig) {
  if (t.is(TermKind::Var)) return true;
  const Spine s = spine_of(t);
  if (!s.head.is(TermKind::Symbol)) return false;
  const SymbolInfo* c = sig.find(s.head.name());
  if (!c || !c->is_constructor || s.args.size() != c->arity) return false;
  for (const Term& a : s.args) {
    if (!is_pattern(a, sig)) return false;
  }
  return true;
}

}  // namespace sctlint
