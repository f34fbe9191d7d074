#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arcane/tile.hpp"

namespace arcane {

// H x W matrix of tile codes.
struct Grid {
    int rows = 0;
    int cols = 0;
    std::vector<uint8_t> codes;

    Grid() = default;
    Grid(int r, int c) : rows(r), cols(c), codes(static_cast<size_t>(r) * c, 0) {}

    uint8_t& at(int r, int c) { return codes[static_cast<size_t>(r) * cols + c]; }
    uint8_t at(int r, int c) const { return codes[static_cast<size_t>(r) * cols + c]; }
    bool in_bounds(int r, int c) const { return r >= 0 && r < rows && c >= 0 && c < cols; }

    bool operator==(const Grid& o) const {
        return rows == o.rows && cols == o.cols && codes == o.codes;
    }
};

enum class GameKind { GoldDigger, TreasureKeeper, WaterPuzzle };

std::string game_name(GameKind k);
GameKind game_from_name(const std::string& name);

enum class Action { NIL = 0, UP = 1, DOWN = 2, LEFT = 3, RIGHT = 4, USE = 5 };

std::string action_name(Action a);
Action action_from_name(const std::string& name);

struct ScoreParams {
    int jewel = 2;          // GoldDigger: per jewel collected
    int kill = 10;          // GoldDigger: per monster killed
    int loss_penalty = -5;  // GoldDigger: added on death
    int period = 5;         // TreasureKeeper: every 100 ticks
    int key = 5;            // WaterPuzzle: key pickup
    int door = 10;          // WaterPuzzle: door entered with key

    bool operator==(const ScoreParams&) const = default;
};

// Per-game rules and the fixed screen geometry levels must match.
struct GameConfig {
    GameKind kind = GameKind::GoldDigger;
    int rows = 0;
    int cols = 0;
    int max_ticks = 0;
    ScoreParams scores;
    std::map<char, int> legend;  // level character -> tile code

    static GameConfig standard(GameKind k);
    // Variant of the standard config with a different screen size
    // (used by the small benchmark levels).
    static GameConfig sized(GameKind k, int rows, int cols);

    static GameConfig from_json_file(const std::string& path);
    void to_json_file(const std::string& path) const;

    std::vector<Action> legal_actions() const;
    char char_for(int code) const;  // reverse legend lookup

    bool operator==(const GameConfig&) const = default;
};

std::vector<Action> legal_actions(GameKind k);

// A playable map: the initial grid plus the config it belongs to.
// Invariants (checked at construction): exactly one avatar, grid
// dimensions equal the config's screen size, all codes in the legend.
struct Level {
    GameConfig config;
    Grid grid;
    std::string name;

    std::pair<int, int> avatar_pos() const;
};

Level make_level(GameConfig cfg, Grid grid, std::string name = "");

// ASCII grid, one legend character per tile; '#' comment lines ignored.
Level parse_level(const std::string& text, const GameConfig& cfg, std::string name = "");
std::string serialize_level(const Level& level);

Level load_level(const std::string& path, const GameConfig& cfg);
void save_level(const Level& level, const std::string& path);

}  // namespace arcane
