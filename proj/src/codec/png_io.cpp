// Copyright 2026-present the stegainr project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <png.h>

#include <csetjmp>
#include <cstdio>
#include <memory>
#include <vector>

#include "stegainr/codec/io.hpp"
#include "stegainr/error.hpp"

namespace stegainr {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const { std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

// libpng reports errors by longjmp; the message is parked here first.
thread_local std::string g_png_message;

void
png_error_handler(png_structp png, png_const_charp msg) {
    g_png_message = msg ? msg : "unknown error";
    png_longjmp(png, 1);
}

void
png_warning_handler(png_structp, png_const_charp) {}

}  // namespace

RasterImage
read_png(const std::string& path) {
    FilePtr file(std::fopen(path.c_str(), "rb"));
    if (!file) {
        fail(ErrorCode::Io, "cannot open image '" + path + "'");
    }
    unsigned char header[8] = {};
    if (std::fread(header, 1, 8, file.get()) != 8 || png_sig_cmp(header, 0, 8) != 0) {
        fail(ErrorCode::Format, "'" + path + "' is not a PNG file");
    }

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, png_error_handler,
                                             png_warning_handler);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(ErrorCode::Io, "libpng initialization failed");
    }

    // Everything the error path touches lives outside the setjmp frame.
    auto img = std::make_unique<RasterImage>();
    auto rows = std::make_unique<std::vector<png_bytep>>();
    volatile bool bad_layout = false;

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(ErrorCode::Format, "PNG '" + path + "': " + g_png_message);
    }

    png_init_io(png, file.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    const png_byte color = png_get_color_type(png, info);
    const png_byte depth = png_get_bit_depth(png, info);
    if (depth == 16) {
        png_set_strip_16(png);
    }
    if (color == PNG_COLOR_TYPE_PALETTE) {
        png_set_palette_to_rgb(png);
    }
    if (color == PNG_COLOR_TYPE_GRAY && depth < 8) {
        png_set_expand_gray_1_2_4_to_8(png);
    }
    if (color & PNG_COLOR_MASK_ALPHA) {
        png_set_strip_alpha(png);
    }
    png_read_update_info(png, info);

    img->width = png_get_image_width(png, info);
    img->height = png_get_image_height(png, info);
    img->channels = png_get_channels(png, info);
    if (img->channels == 1 || img->channels == 3) {
        img->samples.resize(img->width * img->height * img->channels);
        rows->resize(img->height);
        for (std::size_t y = 0; y < img->height; ++y) {
            (*rows)[y] = img->samples.data() + y * img->width * img->channels;
        }
        png_read_image(png, rows->data());
        png_read_end(png, nullptr);
    } else {
        bad_layout = true;
    }
    png_destroy_read_struct(&png, &info, nullptr);
    if (bad_layout) {
        fail(ErrorCode::Format, "unsupported PNG channel layout in '" + path + "'");
    }
    return std::move(*img);
}

void
write_png(const std::string& path, const RasterImage& img) {
    if (img.channels != 1 && img.channels != 3) {
        fail(ErrorCode::Argument, "PNG output needs 1 or 3 channels");
    }
    if (img.width == 0 || img.height == 0 ||
        img.samples.size() != img.width * img.height * img.channels) {
        fail(ErrorCode::Argument, "image shape does not match its samples");
    }
    FilePtr file(std::fopen(path.c_str(), "wb"));
    if (!file) {
        fail(ErrorCode::Io, "cannot open '" + path + "' for writing");
    }
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, png_error_handler,
                                              png_warning_handler);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_write_struct(&png, &info);
        fail(ErrorCode::Io, "libpng initialization failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        fail(ErrorCode::Io, "PNG '" + path + "': " + g_png_message);
    }
    png_init_io(png, file.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(img.width),
                 static_cast<png_uint_32>(img.height), 8,
                 img.channels == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (std::size_t y = 0; y < img.height; ++y) {
        png_write_row(png, img.samples.data() + y * img.width * img.channels);
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    if (std::fflush(file.get()) != 0) {
        fail(ErrorCode::Io, "failed writing '" + path + "'");
    }
}

}  // namespace stegainr
