#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "oh/jsonio.hpp"

namespace oh {

enum class TargetKind { service, work_order, human_task, billing };
std::string to_string(TargetKind k);
TargetKind target_kind_from_string(const std::string& s);

struct TargetDecl {
  std::string id;
  TargetKind kind = TargetKind::service;
  // Non-empty when this target sits behind a partner gateway; traffic to it
  // must be envelope-wrapped.
  std::string b2b_partner;
};

// Conjunction of parameter equality tests. Absent condition = always include.
struct Condition {
  std::map<std::string, std::string> equals;
  bool satisfied(const std::map<std::string, std::string>& params) const;
};

struct ComponentSpec {
  std::string component_code;
  std::string service_code;
  std::string target_id;
  bool billable = false;
  std::set<std::string> param_keys;
  std::set<std::string> requires_data;
  std::set<std::string> provides_data;
  std::set<std::string> depends_on;  // component codes within the same product
  std::optional<Condition> condition;
};

struct ProductSpec {
  std::string product_code;
  std::string display_name;
  long long price = 0;  // whole currency units
  std::vector<ComponentSpec> components;
  const ComponentSpec* find_component(const std::string& code) const;
};

struct Catalog {
  std::vector<TargetDecl> targets;
  std::vector<ProductSpec> products;

  const ProductSpec* find_product(const std::string& code) const;
  const TargetDecl* find_target(const std::string& id) const;
  // The declared billing target, if any.
  std::optional<std::string> billing_target() const;
};

struct Finding {
  std::string rule;
  std::string product_code;  // empty for catalog-level findings
  std::string detail;
  json to_json() const;
};

struct ValidationReport {
  std::vector<Finding> findings;
  bool ok() const { return findings.empty(); }
  json to_json() const;
};

// Commercial projection of a product. Carries no target ids and no component
// dependency information.
struct ProductView {
  std::string product_code;
  std::string display_name;
  long long price = 0;
  std::vector<std::string> attributes;        // union of component param keys
  std::vector<std::string> billable_services; // service codes of billable components
  json to_json() const;
};

// Parses the catalog document. Syntactic only; semantic rules live in
// validate_catalog.
Catalog load_catalog(const std::string& text, const std::string& context = "catalog");
Catalog load_catalog_file(const std::string& path);

ValidationReport validate_catalog(const Catalog& catalog);

ProductView customer_view(const Catalog& catalog, const std::string& product_code);

// Components whose condition is absent or satisfied, ordered by
// component_code.
std::vector<ComponentSpec> resolve_components(const Catalog& catalog,
                                              const std::string& product_code,
                                              const std::map<std::string, std::string>& order_params);

}  // namespace oh
