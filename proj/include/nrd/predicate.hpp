// predicate.hpp
//
// Boolean predicates P subseteq {0,1}^r as truth tables, the symmetry group
// of coordinate permutations and per-coordinate bit flips, canonical forms,
// and enumeration of nontrivial equivalence classes.
//
// Tuple encoding: a tuple (x_1, ..., x_r) maps to the index whose binary
// expansion has x_1 as the most significant bit, so index 0 is 00..0 and the
// tuple order matches (0000, 0001, 0010, ...).

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nrd
{

inline constexpr int max_arity = 8;

class predicate
{
public:
  explicit predicate( int arity ) : arity_( arity )
  {
    if ( arity < 1 || arity > max_arity )
      throw std::invalid_argument( "predicate: arity must be in [1, 8]" );
  }

  static predicate from_bits( std::string_view bits )
  {
    int arity = 0;
    while ( arity <= max_arity && ( std::size_t( 1 ) << ( std::size_t( 1 ) << arity ) ) != 0 &&
            ( std::size_t( 1 ) << arity ) < bits.size() )
      ++arity;
    if ( arity > max_arity || ( std::size_t( 1 ) << arity ) != bits.size() )
      throw std::invalid_argument( "predicate: bit string length must be 2^r with r in [1, 8]" );
    predicate p( arity );
    for ( unsigned t = 0; t < bits.size(); ++t )
    {
      if ( bits[t] == '1' )
        p.insert( t );
      else if ( bits[t] != '0' )
        throw std::invalid_argument( "predicate: bit string may contain only 0 and 1" );
    }
    return p;
  }

  static predicate from_tuples( int arity, std::span<const unsigned> tuples )
  {
    predicate p( arity );
    for ( unsigned t : tuples )
      p.insert( t );
    return p;
  }

  static predicate from_tuples( int arity, std::initializer_list<unsigned> tuples )
  {
    return from_tuples( arity, std::span<const unsigned>( tuples.begin(), tuples.size() ) );
  }

  /* Parses the tuple-list form, e.g. "{0000,0011}".  The arity argument is
   * only consulted for the empty list "{}", where it cannot be inferred. */
  static predicate from_tuple_list( std::string_view text, int arity = 0 )
  {
    auto fail = []() -> predicate { throw std::invalid_argument( "predicate: malformed tuple list" ); };
    if ( text.size() < 2 || text.front() != '{' || text.back() != '}' )
      return fail();
    std::string_view body = text.substr( 1, text.size() - 2 );
    if ( body.empty() )
    {
      if ( arity == 0 )
        throw std::invalid_argument( "predicate: empty tuple list needs an explicit arity" );
      return predicate( arity );
    }
    std::vector<std::string_view> parts;
    while ( true )
    {
      auto comma = body.find( ',' );
      parts.push_back( body.substr( 0, comma ) );
      if ( comma == std::string_view::npos )
        break;
      body.remove_prefix( comma + 1 );
    }
    int r = static_cast<int>( parts.front().size() );
    if ( arity != 0 && arity != r )
      throw std::invalid_argument( "predicate: tuple list arity mismatch" );
    predicate p( r );
    for ( auto part : parts )
    {
      if ( static_cast<int>( part.size() ) != r )
        return fail();
      unsigned t = 0;
      for ( char c : part )
      {
        if ( c != '0' && c != '1' )
          return fail();
        t = ( t << 1 ) | unsigned( c == '1' );
      }
      p.insert( t );
    }
    return p;
  }

  int arity() const { return arity_; }
  unsigned table_size() const { return 1u << arity_; }

  bool contains( unsigned tuple ) const
  {
    check_tuple( tuple );
    return ( words_[tuple >> 6] >> ( tuple & 63u ) ) & 1u;
  }

  /* Membership of an explicit bit tuple (x_1, ..., x_r). */
  bool membership( std::span<const int> bits ) const
  {
    if ( static_cast<int>( bits.size() ) != arity_ )
      throw std::invalid_argument( "membership: tuple length must equal the arity" );
    unsigned t = 0;
    for ( int b : bits )
      t = ( t << 1 ) | unsigned( b != 0 );
    return contains( t );
  }

  void insert( unsigned tuple )
  {
    check_tuple( tuple );
    words_[tuple >> 6] |= std::uint64_t( 1 ) << ( tuple & 63u );
  }

  void erase( unsigned tuple )
  {
    check_tuple( tuple );
    words_[tuple >> 6] &= ~( std::uint64_t( 1 ) << ( tuple & 63u ) );
  }

  int count() const
  {
    int n = 0;
    for ( auto w : words_ )
      n += std::popcount( w );
    return n;
  }

  bool is_empty() const { return count() == 0; }
  bool is_full() const { return count() == static_cast<int>( table_size() ); }
  bool is_trivial() const { return is_empty() || is_full(); }

  /* True iff *this is a subset of other (same arity required). */
  bool subset_of( const predicate& other ) const
  {
    if ( arity_ != other.arity_ )
      throw std::invalid_argument( "subset_of: arity mismatch" );
    for ( std::size_t i = 0; i < words_.size(); ++i )
      if ( words_[i] & ~other.words_[i] )
        return false;
    return true;
  }

  std::vector<unsigned> tuples() const
  {
    std::vector<unsigned> out;
    for ( unsigned t = 0; t < table_size(); ++t )
      if ( contains( t ) )
        out.push_back( t );
    return out;
  }

  std::string to_bits() const
  {
    std::string s( table_size(), '0' );
    for ( unsigned t = 0; t < table_size(); ++t )
      if ( contains( t ) )
        s[t] = '1';
    return s;
  }

  std::string tuple_name( unsigned tuple ) const
  {
    check_tuple( tuple );
    std::string s( arity_, '0' );
    for ( int i = 0; i < arity_; ++i )
      if ( ( tuple >> ( arity_ - 1 - i ) ) & 1u )
        s[i] = '1';
    return s;
  }

  std::string to_tuple_list() const
  {
    std::string s = "{";
    bool first = true;
    for ( unsigned t : tuples() )
    {
      if ( !first )
        s += ',';
      s += tuple_name( t );
      first = false;
    }
    s += '}';
    return s;
  }

  /* Truth table as a plain mask, bit i = tuple i.  Only valid for r <= 6. */
  std::uint64_t mask() const
  {
    if ( arity_ > 6 )
      throw std::logic_error( "mask: table does not fit one word" );
    return words_[0];
  }

  friend bool operator==( const predicate& a, const predicate& b ) = default;

  /* "Earlier" order used to pick canonical orbit representatives: the
   * predicate containing the earlier tuple at the first point of difference
   * sorts first, so {0000,0011} precedes {0000,1010}. */
  static bool earlier( const predicate& a, const predicate& b )
  {
    if ( a.arity_ != b.arity_ )
      throw std::invalid_argument( "earlier: arity mismatch" );
    for ( std::size_t i = 0; i < a.words_.size(); ++i )
    {
      std::uint64_t diff = a.words_[i] ^ b.words_[i];
      if ( diff )
        return ( a.words_[i] >> std::countr_zero( diff ) ) & 1u;
    }
    return false;
  }

  /* Table order: ascending lexicographic on the 2^r-character bit string.
   * This is the order that assigns each class its index in the
   * classification table. */
  static bool table_less( const predicate& a, const predicate& b )
  {
    return earlier( b, a );
  }

private:
  void check_tuple( unsigned tuple ) const
  {
    if ( tuple >= table_size() )
      throw std::out_of_range( "predicate: tuple index out of range" );
  }

  int arity_;
  std::array<std::uint64_t, 4> words_{};
};

/* A symmetry g acts on tuples by g(t)_i = t_{perm(i)} XOR flips_i, i.e.
 * position i of the image reads (possibly negated) position perm(i) of the
 * argument.  Coordinates are 0-based internally. */
struct symmetry
{
  int arity = 0;
  std::array<std::uint8_t, max_arity> perm{};
  std::uint8_t flips = 0;

  static symmetry identity( int arity )
  {
    symmetry g;
    g.arity = arity;
    for ( int i = 0; i < arity; ++i )
      g.perm[i] = static_cast<std::uint8_t>( i );
    return g;
  }

  bool is_valid() const
  {
    if ( arity < 1 || arity > max_arity )
      return false;
    std::uint16_t seen = 0;
    for ( int i = 0; i < arity; ++i )
    {
      if ( perm[i] >= arity || ( seen >> perm[i] ) & 1u )
        return false;
      seen |= std::uint16_t( 1 ) << perm[i];
    }
    return true;
  }

  unsigned apply_tuple( unsigned tuple ) const
  {
    unsigned out = 0;
    for ( int i = 0; i < arity; ++i )
    {
      unsigned bit = ( tuple >> ( arity - 1 - perm[i] ) ) & 1u;
      bit ^= ( flips >> i ) & 1u;
      out |= bit << ( arity - 1 - i );
    }
    return out;
  }

  symmetry inverse() const
  {
    symmetry inv;
    inv.arity = arity;
    for ( int i = 0; i < arity; ++i )
    {
      inv.perm[perm[i]] = static_cast<std::uint8_t>( i );
      if ( ( flips >> i ) & 1u )
        inv.flips |= std::uint8_t( 1 ) << perm[i];
    }
    return inv;
  }

  friend bool operator==( const symmetry& a, const symmetry& b )
  {
    if ( a.arity != b.arity || a.flips != b.flips )
      return false;
    return std::equal( a.perm.begin(), a.perm.begin() + a.arity, b.perm.begin() );
  }
};

/* compose(g, h) applies h first: compose(g, h)(t) = g(h(t)). */
inline symmetry compose( const symmetry& g, const symmetry& h )
{
  if ( g.arity != h.arity )
    throw std::invalid_argument( "compose: arity mismatch" );
  symmetry out;
  out.arity = g.arity;
  for ( int i = 0; i < g.arity; ++i )
  {
    out.perm[i] = h.perm[g.perm[i]];
    std::uint8_t f = std::uint8_t( ( ( h.flips >> g.perm[i] ) ^ ( g.flips >> i ) ) & 1u );
    out.flips |= std::uint8_t( f << i );
  }
  return out;
}

/* All 2^r * r! symmetries, in a fixed deterministic order. */
inline std::vector<symmetry> all_symmetries( int arity )
{
  if ( arity < 1 || arity > max_arity )
    throw std::invalid_argument( "all_symmetries: arity must be in [1, 8]" );
  std::vector<std::uint8_t> base( arity );
  std::iota( base.begin(), base.end(), std::uint8_t( 0 ) );
  std::vector<symmetry> out;
  do
  {
    for ( unsigned flips = 0; flips < ( 1u << arity ); ++flips )
    {
      symmetry g;
      g.arity = arity;
      std::copy( base.begin(), base.end(), g.perm.begin() );
      g.flips = static_cast<std::uint8_t>( flips );
      out.push_back( g );
    }
  } while ( std::next_permutation( base.begin(), base.end() ) );
  return out;
}

inline predicate apply_symmetry( const predicate& p, const symmetry& g )
{
  if ( g.arity != p.arity() )
    throw std::invalid_argument( "apply_symmetry: arity mismatch" );
  if ( !g.is_valid() )
    throw std::invalid_argument( "apply_symmetry: perm is not a bijection" );
  predicate out( p.arity() );
  for ( unsigned t = 0; t < p.table_size(); ++t )
    if ( p.contains( t ) )
      out.insert( g.apply_tuple( t ) );
  return out;
}

/* Lexicographically first orbit element together with a witnessing symmetry,
 * i.e. apply_symmetry(p, witness) equals the canonical form. */
inline std::pair<predicate, symmetry> canonical_form( const predicate& p )
{
  predicate best = p;
  symmetry witness = symmetry::identity( p.arity() );
  for ( const auto& g : all_symmetries( p.arity() ) )
  {
    predicate q = apply_symmetry( p, g );
    if ( predicate::earlier( q, best ) )
    {
      best = q;
      witness = g;
    }
  }
  return { best, witness };
}

/* Canonical representatives of all nontrivial classes, sorted in table
 * order; the position in this list is the predicate number. */
inline std::vector<predicate> enumerate_classes( int arity )
{
  if ( arity < 1 || arity > 4 )
    throw std::invalid_argument( "enumerate_classes: exhaustive enumeration needs arity <= 4" );

  const unsigned table_bits = 1u << arity;
  const std::uint64_t num_predicates = std::uint64_t( 1 ) << table_bits;
  const auto symmetries = all_symmetries( arity );

  // Tuple maps let a whole orbit be generated by table lookups on masks.
  std::vector<std::array<std::uint8_t, 16>> tuple_map( symmetries.size() );
  for ( std::size_t gi = 0; gi < symmetries.size(); ++gi )
    for ( unsigned t = 0; t < table_bits; ++t )
      tuple_map[gi][t] = static_cast<std::uint8_t>( symmetries[gi].apply_tuple( t ) );

  // Mask order mirroring predicate::earlier: at the first differing tuple,
  // the mask containing it comes first.
  auto mask_earlier = []( std::uint64_t a, std::uint64_t b ) {
    std::uint64_t diff = a ^ b;
    return diff != 0 && ( ( a >> std::countr_zero( diff ) ) & 1u );
  };

  std::vector<bool> visited( num_predicates, false );
  std::vector<std::uint64_t> canonical_masks;
  std::vector<std::uint64_t> orbit;
  for ( std::uint64_t m = 0; m < num_predicates; ++m )
  {
    if ( visited[m] )
      continue;
    orbit.clear();
    std::uint64_t best = m;
    for ( std::size_t gi = 0; gi < symmetries.size(); ++gi )
    {
      std::uint64_t image = 0;
      std::uint64_t rest = m;
      while ( rest )
      {
        int t = std::countr_zero( rest );
        image |= std::uint64_t( 1 ) << tuple_map[gi][t];
        rest &= rest - 1;
      }
      if ( !visited[image] )
      {
        visited[image] = true;
        orbit.push_back( image );
      }
      if ( mask_earlier( image, best ) )
        best = image;
    }
    if ( m != 0 && m != num_predicates - 1 ) // skip the two trivial classes
      canonical_masks.push_back( best );
  }

  std::vector<predicate> out;
  out.reserve( canonical_masks.size() );
  for ( std::uint64_t m : canonical_masks )
  {
    predicate p( arity );
    for ( unsigned t = 0; t < table_bits; ++t )
      if ( ( m >> t ) & 1u )
        p.insert( t );
    out.push_back( p );
  }
  std::sort( out.begin(), out.end(), predicate::table_less );
  return out;
}

} // namespace nrd
