#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "arcane/image.hpp"

namespace arcane {

constexpr int kTileSize = 10;
constexpr int kMaxTileCodes = 16;

// Tile codes shared by all games. Code 0 is reserved for blank /
// out-of-screen padding.
namespace tile {
enum : int {
    kBlank = 0,
    kFloor = 1,
    kWall = 2,
    kAvatar = 3,
    kMonster = 4,
    kJewel = 5,
    kBox = 6,
    kKey = 7,
    kDoor = 8,
    kCount = 9,
};
}

// Fixed 10x10 RGB tile.
struct TileImage {
    std::array<uint8_t, kTileSize * kTileSize * 3> px{};

    uint8_t* at(int r, int c) { return &px[(static_cast<size_t>(r) * kTileSize + c) * 3]; }
    const uint8_t* at(int r, int c) const {
        return &px[(static_cast<size_t>(r) * kTileSize + c) * 3];
    }

    static TileImage flat(uint8_t r, uint8_t g, uint8_t b);

    bool operator==(const TileImage& o) const { return px == o.px; }
};

// Ten averaged-RGB samples: five from row 3 (cols 0,2,4,6,8) and five
// from col 4 (rows 0,2,4,6,8). Used for nearest-tile identification.
using RefVector = std::array<double, 10>;

RefVector build_reference_vector(const TileImage& t);

double l1_distance(const RefVector& a, const RefVector& b);

struct CatalogEntry {
    TileImage image;
    int code = 0;
    RefVector refvec{};
};

// Immutable table of <tile image, code, reference vector>. Codes are
// consecutive 0..N-1, N <= 16, and reference vectors are pairwise at
// least 10 apart in L1 so decoding has a safety margin.
class TileCatalog {
  public:
    explicit TileCatalog(std::vector<TileImage> images);

    // The catalog used by the shipped games (codes per arcane::tile).
    static const TileCatalog& builtin();

    int size() const { return static_cast<int>(entries_.size()); }
    const CatalogEntry& entry(int code) const;

    // Nearest reference vector by Manhattan distance; ties break to the
    // lowest code.
    int match(const TileImage& block) const;

    void save(const std::string& path) const;
    static TileCatalog load(const std::string& path);

  private:
    std::vector<CatalogEntry> entries_;
};

int match_tile(const TileImage& block, const TileCatalog& catalog);

}  // namespace arcane
