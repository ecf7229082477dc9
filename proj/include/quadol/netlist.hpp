/*!
  \file netlist.hpp
  \brief LUT networks

  A LutNetwork is a DAG of single-output LUTs over named nets. Every net is
  driven by exactly one primary input or one node. Transformations take a
  network by const reference and return a new value.
*/

#pragma once

#include <quadol/lut6_2.hpp>
#include <quadol/signal.hpp>
#include <quadol/truth_table.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace quadol
{

class NetworkError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct LutNode
{
  SignalId output;
  std::vector<SignalId> fanins;
  TruthTable function;
};

/*! \brief Two nodes packed into one LUT6_2 (F is `f`, G is `g`). */
struct MergedPair
{
  SignalId f;
  SignalId g;
  DualOutputConfig config;
};

class LutNetwork
{
public:
  explicit LutNetwork( std::string model_name = "top" );

  const std::string& model_name() const noexcept { return model_; }

  /*! \brief Net with the given name, created undriven if missing. */
  SignalId signal( std::string_view name );
  std::optional<SignalId> find( std::string_view name ) const;

  SignalId add_pi( std::string_view name );
  SignalId add_node( std::string_view name, std::vector<SignalId> fanins, TruthTable function );
  /*! \brief Defines the driver of an existing, still undriven net. */
  void set_node( SignalId output, std::vector<SignalId> fanins, TruthTable function );
  void add_po( SignalId signal );

  /*! \brief Replaces the function (and fanins) of an existing node. */
  void replace_function( SignalId node, std::vector<SignalId> fanins, TruthTable function );

  void record_merge( MergedPair pair );
  std::span<const MergedPair> merges() const noexcept { return merges_; }
  std::vector<MergedPair>& merge_ledger() noexcept { return merges_; }

  std::size_t num_signals() const noexcept { return names_.size(); }
  std::size_t num_nodes() const noexcept { return node_order_.size(); }
  const std::string& name( SignalId s ) const;

  std::span<const SignalId> pis() const noexcept { return pis_; }
  std::span<const SignalId> pos() const noexcept { return pos_; }
  /*! \brief Node outputs in creation order. */
  std::span<const SignalId> nodes() const noexcept { return node_order_; }

  bool is_pi( SignalId s ) const;
  bool is_node( SignalId s ) const;
  bool is_driven( SignalId s ) const { return is_pi( s ) || is_node( s ); }
  bool drives_po( SignalId s ) const;
  const LutNode& node( SignalId s ) const;

  /*! \brief Checks drivers, fanin arity and distinctness, and acyclicity. */
  void validate() const;

private:
  enum class Driver : uint8_t
  {
    none,
    pi,
    node
  };

  void check_signal( SignalId s ) const;
  void check_node_shape( SignalId output, const std::vector<SignalId>& fanins, const TruthTable& function ) const;

  std::string model_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, SignalId> by_name_;
  std::vector<Driver> driver_;
  std::vector<std::optional<LutNode>> nodes_;
  std::vector<SignalId> pis_;
  std::vector<SignalId> pos_;
  std::vector<SignalId> node_order_;
  std::vector<MergedPair> merges_;
};

/*! \brief Node outputs ordered so that every node follows the drivers of its fanins.

  Throws NetworkError on a combinational cycle.
*/
std::vector<SignalId> topological_order( const LutNetwork& net );

/*! \brief Fanout nodes of every net, indexed by SignalId::value, in node creation order. */
std::vector<std::vector<SignalId>> fanout_lists( const LutNetwork& net );

/*! \brief Removes fanins outside each node's functional support. */
LutNetwork normalize_support( const LutNetwork& net );

/*! \brief LUTs used when each pair in `merges` occupies one dual-output LUT.

  Throws NetworkError if a pair references a missing node or two pairs share a member.
*/
std::size_t lut_count( const LutNetwork& net, std::span<const MergedPair> merges );

/*! \brief LUT count using the network's own merge ledger. */
std::size_t lut_count( const LutNetwork& net );

/*! \brief Same primary input and output names, in the same order. */
bool same_interface( const LutNetwork& a, const LutNetwork& b );

} // namespace quadol
