#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "oh/jsonio.hpp"

namespace oh {

enum class Channel { pos, web, ivr, csr, b2b };
std::string to_string(Channel c);
Channel channel_from_string(const std::string& s);

struct CustomerRef {
  std::string customer_id;
  long long credit_limit = 0;
  std::string premises_address;  // "<area>|<street address>"
  std::set<std::string> cpe_capabilities;
  std::set<std::string> contract_terms;

  json to_json() const;
  static CustomerRef from_json(const json& j);
  bool operator==(const CustomerRef&) const = default;
};

struct OrderLine {
  std::string line_id;
  std::string product_code;
  int qty = 1;
  std::map<std::string, std::string> params;

  json to_json() const;
  static OrderLine from_json(const json& j);
  bool operator==(const OrderLine&) const = default;
};

struct CanonicalOrder {
  std::string order_id;
  Channel channel = Channel::pos;
  CustomerRef customer;
  std::vector<OrderLine> lines;
  int64_t created_at = 0;

  json to_json() const;
  static CanonicalOrder from_json(const json& j);
  // Equality of business content: ignores order_id, created_at and channel.
  bool logically_equal(const CanonicalOrder& other) const;
};

enum class OrderState {
  captured,
  rejected,
  validated,
  decomposed,
  in_progress,
  completed,
  compensating,
  compensated,
  failed,
};
std::string to_string(OrderState s);
OrderState order_state_from_string(const std::string& s);

enum class OrderEvent {
  validation_passed,
  validation_failed,
  decomposition_done,
  fulfillment_started,
  all_done,
  fatal_failure,
  compensation_succeeded,
  compensation_failed,
};
std::string to_string(OrderEvent e);
OrderEvent order_event_from_string(const std::string& s);

// Fixed transition table; anything outside it throws IllegalTransition.
OrderState transition(OrderState state, OrderEvent event);

enum class SubOrderKind { service, billing, work_order, human_task };
std::string to_string(SubOrderKind k);
SubOrderKind suborder_kind_from_string(const std::string& s);

enum class SubOrderState { pending, ready, dispatched, waiting_human, done, failed, compensated };
std::string to_string(SubOrderState s);
SubOrderState suborder_state_from_string(const std::string& s);

struct SubItem {
  std::string service_code;
  std::map<std::string, std::string> params;
  std::set<std::string> provides;  // data keys realized by this item

  json to_json() const;
  static SubItem from_json(const json& j);
  bool operator==(const SubItem&) const = default;
};

struct SubOrder {
  std::string suborder_id;
  std::string order_id;
  std::string line_id;  // empty for order-level sub-orders (billing)
  std::string target_id;
  SubOrderKind kind = SubOrderKind::service;
  std::vector<SubItem> items;
  std::set<std::string> requires_data;
  std::set<std::string> provides_data;
  std::set<std::string> depends_on;  // suborder ids
  SubOrderState state = SubOrderState::pending;

  json to_json() const;
  static SubOrder from_json(const json& j);
  bool operator==(const SubOrder&) const = default;
};

}  // namespace oh
